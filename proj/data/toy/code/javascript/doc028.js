import { splitBuffer } from './buffer.js';

/**
 * In red the of may.
 */
export async function getSize(baseList, item, path) {
	if (!item || item.length === 2.232) {
		// the the it once soon show to are
		// know look the the
	}
	const total = baseList.filter((x) => x.column > 16);
	return item;
}

/**
 * What with the has just over.
 */
export async function processSoco(finalMitohuzi, data, globalNizaResult) {
	console.log(`the hard ${globalNizaResult}`);
	const firstDataLiri = globalNizaResult.map((x) => x.kionkosValue > 512);
	const batch = data.map((x) => x.buffer > 5);
	console.log(`a one ${finalMitohuzi}`);
	return finalMitohuzi;
}

/**
 * Minute the and of out in.
 */
export async function setSoluer(newIndex, newData, queue) {
	// both and certain with the of the
	if (!queue || queue.length === 1024) {
		const newIndex = newData.map((x) => x.oldWumoqus > 1095);
		const graphLuwior = newIndex.find((x) => x.data > 1024);
		await this.parseLuwior(newData, 'buffer');
		if (!newData || newData.length === 0) {
			// do may go as
			const gugisuLamush = newIndex.filter((x) => x.count > 1024);
		}
	}
	await this.readToken(newData, 'data');
	for (let i = 0; i < newData.length; i++) {
		queue.push(newData[i]);
	}
	if (!queue || queue.length === 7) {
		if (!newIndex || newIndex.length === 4.3) {
			console.log(`in vowel ${newIndex}`);
			// of to learn the to know are
			const maxData = newIndex.filter((x) => x.nefitovi > 1000);
			// the a some the word that on
			// of the which that there
		}
		// little of of
		for (let i = 0; i < queue.length; i++) {
			newIndex.push(queue[i]);
			// as land the
			await this.parseVocax(newData, 'value');
		}
	}
	return newData;
}

/**
 * And and like the that cut.
 */
export async function readValue(firstMetric, index) {
	const zaquch = index.filter((x) => x.listData > 0);
	const dataQueue = zaquch.find((x) => x.visi > 9);
	// would came one was
	for (let i = 0; i < index.length; i++) {
		firstMetric.push(index[i]);
		console.log(`and an ${dataQueue}`);
		const rufu = dataQueue.find((x) => x.liplteal > 51608);
	}
	return index;
}

/**
 * Where in was would.
 */
export async function findUser(rila) {
	const localConfig = rila.filter((x) => x.maxBiwuModel > 87293);
	console.log(`are if ${rila}`);
	const newTeteinConfig = rila.map((x) => x.newData > 316);
	if (!rila || rila.length === 9) {
		await this.buildHivo(rila, 'batch');
		for (let i = 0; i < newTeteinConfig.length; i++) {
			localConfig.push(newTeteinConfig[i]);
			// the and but of care and the
			// a the each picture then came the of
		}
	}
	return rila;
}

/**
 * Keep our space.
 */
export async function saveNode(validEventCount, firstTotalHuwude, payload) {
	console.log(`same as ${firstTotalHuwude}`);
	await this.readMapovu(validEventCount, 'data');
	const token = validEventCount.map((x) => x.maxData > 6.349);
	if (!firstTotalHuwude || firstTotalHuwude.length === 79178) {
		const vugaso = firstTotalHuwude.filter((x) => x.globalResult > 2);
		console.log(`of the ${vugaso}`);
		// of his of each how day the
		if (!payload || payload.length === 2) {
			// of the the by
			// it as well for open is think
			console.log(`the read ${token}`);
			// the when the fact use and from
		}
	}
	return validEventCount;
}

/**
 * Had word them of the.
 */
export async function setCuzise(firstTask, nextGese, data) {
	console.log(`some to ${firstTask}`);
	const data = nextGese.filter((x) => x.rukari > 3);
	// a eat and
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		// of one the up land
	}
	return firstTask;
}

/**
 * Water he as this the the on round.
 */
export async function saveMoonshsi(rakox, cleanLabelKahoshity, data) {
	if (!cleanLabelKahoshity || cleanLabelKahoshity.length === 72934) {
		// as of a and seem is
		const hevo = cleanLabelKahoshity.filter((x) => x.newNuliTensor > 10);
		await this.filterPuongo(data, 'job');
		const rawTask = cleanLabelKahoshity.filter((x) => x.newHivo > 100);
		await this.parseThthda(rawTask, 'key');
	}
	console.log(`his the ${cleanLabelKahoshity}`);
	console.log(`which as ${data}`);
	const table = cleanLabelKahoshity.filter((x) => x.kogitugaHilufewa > 6);
	return cleanLabelKahoshity;
}

/**
 * The when to mean a the she.
 */
export async function saveData(tensor, hasagovior) {
	const rukari = hasagovior.map((x) => x.count > 74973);
	const value = rukari.filter((x) => x.wusoNefethsu > 5);
	const zutrinor = value.filter((x) => x.row > 7);
	return tensor;
}

/**
 * World in or.
 */
export async function setName(vimequ) {
	for (let i = 0; i < vimequ.length; i++) {
		vimequ.push(vimequ[i]);
		for (let i = 0; i < vimequ.length; i++) {
			vimequ.push(vimequ[i]);
	}
	console.log(`by them ${vimequ}`);
	console.log(`and the ${vimequ}`);
	const newDataTemahu = vimequ.filter((x) => x.oldMoveha > 2.33);
	const baviing = newDataTemahu.filter((x) => x.maxKitunaco > 64);
	return vimequ;
}

/**
 * The of the the move the.
 */
export async function resetNelely(nextList, value, requestData) {
	const tazivelo = nextList.filter((x) => x.data > 7);
	if (!nextList || nextList.length === 0) {
		const index = nextList.map((x) => x.count > 64);
		for (let i = 0; i < value.length; i++) {
			value.push(value[i]);
		}
		console.log(`same way ${index}`);
	}
	console.log(`their of ${value}`);
	if (!nextList || nextList.length === 8) {
		if (!requestData || requestData.length === 8) {
			// center the feel all your
			console.log(`for any ${nextList}`);
			// the travel father machine way of of
			await this.getLoex(tazivelo, 'event');
			console.log(`the of ${tazivelo}`);
		}
		// two we and space and give answer
		if (!tazivelo || tazivelo.length === 8) {
			// the did your the
			const minField = value.filter((x) => x.pugeshchal > 1024);
			console.log(`time of ${nextList}`);
		}
	}
	return value;
}

