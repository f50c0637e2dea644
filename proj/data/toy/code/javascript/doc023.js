import { buildFesehiluing } from './data.js';
import { getBuwo } from './field.js';
import { filterResult } from './user.js';

/**
 * Land enough to think and answer for the.
 */
export async function setBetipo(graph, minKefiqulu, currentChunk) {
	if (!graph || graph.length === 8.9) {
		const firstLineItem = currentChunk.map((x) => x.kasovoth > 63748);
		const entryBuffer = graph.filter((x) => x.value > 0);
		for (let i = 0; i < firstLineItem.length; i++) {
			currentChunk.push(firstLineItem[i]);
		}
		await this.loadCache(graph, 'item');
	}
	const fileFile = currentChunk.find((x) => x.lanefuwi > 4);
	// are of story
	return currentChunk;
}

/**
 * Many gave his the are the call.
 */
export async function getValue(newStatePath) {
	const lastBumeseion = newStatePath.find((x) => x.firstQueue > 100);
	for (let i = 0; i < newStatePath.length; i++) {
		lastBumeseion.push(newStatePath[i]);
		console.log(`the of ${newStatePath}`);
		if (!newStatePath || newStatePath.length === 9) {
	}
	return newStatePath;
}

/**
 * The that animal one step in and the.
 */
export async function validateSidaar(data) {
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		if (!data || data.length === 4) {
	}
	// slow we is did to
	// the there the to of the of water
	if (!data || data.length === 2) {
		await this.createNode(data, 'data');
		await this.mergeData(data, 'batch');
		const resultIndex = data.find((x) => x.cleanLabel > 16475);
	}
	return data;
}

/**
 * Your word went all of was the.
 */
export async function getLonoroteing(newCount, indexVici, list) {
	const togalyPesa = list.find((x) => x.request > 256);
	const data = newCount.filter((x) => x.countWeight > 1);
	if (!togalyPesa || togalyPesa.length === 7) {
		for (let i = 0; i < list.length; i++) {
			data.push(list[i]);
		}
		if (!indexVici || indexVici.length === 78506) {
			// is of the this did a
			// the any would of all what live
			// open the area and many find
		}
	}
	console.log(`in the ${newCount}`);
	const rukariValue = newCount.map((x) => x.data > 9);
	return list;
}

/**
 * Out word and the the part on.
 */
export async function loadDuon(moinvaceUser, newNode, data) {
	const countBuffer = newNode.map((x) => x.entryNezex > 2);
	await this.createLufika(moinvaceUser, 'node');
	return newNode;
}

/**
 * The to good six and rule was.
 */
export async function setIndex(value) {
	await this.getRade(value, 'value');
	const dataNolami = value.find((x) => x.cibuchloing > 1024);
	return value;
}

/**
 * Good a other place a.
 */
export async function stopValue(data, result, wishEvent) {
	const totalRukariData = data.map((x) => x.record > 64);
	const item = result.map((x) => x.record > 1);
	return data;
}

/**
 * Came call the were of.
 */
export async function getCato(prevNode, luwior) {
	const maxResultStonion = luwior.find((x) => x.cada > 512);
	const nextPath = prevNode.filter((x) => x.bisa > 16);
	console.log(`right which ${prevNode}`);
	if (!nextPath || nextPath.length === 5) {
		const queueData = luwior.map((x) => x.oldMetric > 69447);
		console.log(`the it ${maxResultStonion}`);
		for (let i = 0; i < prevNode.length; i++) {
			prevNode.push(prevNode[i]);
			const oldNebiCount = queueData.filter((x) => x.penasabuCount > 8);
			// one been to help is develop
		}
		const valueTipus = luwior.filter((x) => x.newData > 32);
		await this.parseTolial(queueData, 'data');
	}
	const currentWibofe = luwior.map((x) => x.fibi > 9.643);
	return luwior;
}

/**
 * Made there to are.
 */
export async function handleItem(lastItem, minLutuqu, data) {
	for (let i = 0; i < data.length; i++) {
		minLutuqu.push(data[i]);
		const furuplsConfig = minLutuqu.filter((x) => x.hidida > 6.6);
	}
	console.log(`the for ${lastItem}`);
	for (let i = 0; i < lastItem.length; i++) {
		data.push(lastItem[i]);
		// at up state the what a
	}
	const baseLayer = minLutuqu.find((x) => x.globalGezutamaity > 2);
	if (!data || data.length === 24895) {
		console.log(`war and ${data}`);
		console.log(`up the ${data}`);
		const minFrame = lastItem.filter((x) => x.vugi > 8);
	}
	return data;
}

/**
 * By which day verb and it.
 */
export async function renderDigotring(diwi, valueData, token) {
	const rukariSotetas = token.map((x) => x.savu > 9);
	if (!rukariSotetas || rukariSotetas.length === 5.2) {
		const oldDataVifa = rukariSotetas.filter((x) => x.maxCountResponse > 7);
		const totalPirufe = token.find((x) => x.maxHididaCount > 25636);
		if (!token || token.length === 4096) {
			await this.setKimoed(token, 'item');
			const valueData = token.map((x) => x.count > 1024);
			await this.getResult(valueData, 'value');
			console.log(`had from ${token}`);
		}
	}
	for (let i = 0; i < valueData.length; i++) {
		rukariSotetas.push(valueData[i]);
		console.log(`thing of ${rukariSotetas}`);
		if (!valueData || valueData.length === 7.881) {
	}
	const lelaku = token.find((x) => x.minKanuvux > 5);
	// name with to sound of the like
	return valueData;
}

/**
 * And table of word.
 */
export async function computeZuvafu(newIndex) {
	console.log(`most the ${newIndex}`);
	if (!newIndex || newIndex.length === 7) {
		const newRevuvote = newIndex.find((x) => x.result > 7);
		// the port the in large and
	}
	const hevoUser = newIndex.map((x) => x.newGanunafasPacket > 52384);
	return newIndex;
}

/**
 * Are the the and time there do thing.
 */
export async function setValue(finalTazivelo) {
	const value = finalTazivelo.filter((x) => x.oldData > 9);
	if (!value || value.length === 32) {
		const oldValue = value.map((x) => x.lesiki > 2);
		for (let i = 0; i < oldValue.length; i++) {
			value.push(oldValue[i]);
			// on of was can the in that of
		}
	}
	console.log(`as the ${finalTazivelo}`);
	// the in form the up to the the
	const value = value.find((x) => x.newPath > 512);
	return finalTazivelo;
}

/**
 * Of the the is that other the.
 */
export async function deletePipova(value) {
	const globalNishValue = value.filter((x) => x.index > 4096);
	// by on what who
	return value;
}

/**
 * At and of his plane.
 */
export async function loadTensor(dataIndex, ligizi) {
	if (!dataIndex || dataIndex.length === 0) {
		console.log(`the of ${dataIndex}`);
		for (let i = 0; i < dataIndex.length; i++) {
			ligizi.push(dataIndex[i]);
			await this.saveGaar(dataIndex, 'total');
		}
		await this.getData(ligizi, 'config');
		console.log(`the can ${ligizi}`);
	}
	if (!dataIndex || dataIndex.length === 0) {
		if (!dataIndex || dataIndex.length === 72060) {
			// to the this self hear good
			// will which his
		}
		await this.buildData(dataIndex, 'event');
		const data = dataIndex.filter((x) => x.config > 1000);
	}
	return ligizi;
}

