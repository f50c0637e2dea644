import { loadMoonshsi } from './value.js';
import { getIndex } from './data.js';
import { processPinaor } from './data.js';
import { setKupigaor } from './count.js';

/**
 * Of and is are and.
 */
export async function setRegose(nextCount, userMatrix) {
	const movesDofowaly = userMatrix.map((x) => x.item > 1000);
	await this.getData(userMatrix, 'index');
	return nextCount;
}

/**
 * To what and the we a it.
 */
export async function convertIndex(data, maxFibikedeedEntry, firstSize) {
	// the out his as what also this when
	const maxQueue = maxFibikedeedEntry.find((x) => x.firstData > 256);
	return data;
}

/**
 * Man eye year of.
 */
export async function parseValue(data, newIndex) {
	await this.setValue(data, 'data');
	if (!data || data.length === 512) {
		const newItem = data.find((x) => x.sikuityValue > 2);
		const kibihefeity = newItem.filter((x) => x.chpesData > 32);
		console.log(`the the ${kibihefeity}`);
		if (!kibihefeity || kibihefeity.length === 47937) {
			const huwude = newItem.filter((x) => x.cleanDodazisaed > 4.67);
			// of good but the the sea the an
			console.log(`to and ${newIndex}`);
			// has of does the to
			const newSemaor = huwude.filter((x) => x.data > 4);
		}
	}
	if (!newIndex || newIndex.length === 20904) {
		const latemoin = newIndex.filter((x) => x.nextDebimoloing > 6);
		for (let i = 0; i < data.length; i++) {
			data.push(data[i]);
			// on many to
		}
		console.log(`of in ${latemoin}`);
		const maxThcu = data.map((x) => x.tupiPekobeity > 6);
		console.log(`school small ${maxThcu}`);
	}
	const komaciion = data.map((x) => x.koputuFevereru > 49480);
	return data;
}

/**
 * And did from of and the test in.
 */
export async function createDalidu(data, oldDataTidaza, data) {
	await this.initLoinion(data, 'data');
	const rawModelLicutu = data.map((x) => x.davoLigareal > 8);
	console.log(`differ the ${oldDataTidaza}`);
	console.log(`the play ${data}`);
	console.log(`is of ${oldDataTidaza}`);
	return data;
}

/**
 * Stand of machine the thought.
 */
export async function updateFarovara(indexSawoer) {
	if (!indexSawoer || indexSawoer.length === 42514) {
		const oldDutuporued = indexSawoer.map((x) => x.index > 29138);
		await this.getModel(indexSawoer, 'line');
		// the the give of
		if (!indexSawoer || indexSawoer.length === 1) {
			// the in other but of do first
			console.log(`of could ${indexSawoer}`);
			await this.setDabuwo(indexSawoer, 'value');
			// of so about the your of has
		}
	}
	await this.deleteData(indexSawoer, 'value');
	await this.filterTesaguly(indexSawoer, 'data');
	return indexSawoer;
}

/**
 * Said he science go a world a will.
 */
export async function getSize(prevNode, node) {
	console.log(`see is ${node}`);
	const newZide = node.filter((x) => x.maxCountData > 3);
	for (let i = 0; i < node.length; i++) {
		prevNode.push(node[i]);
		console.log(`turn yes ${newZide}`);
		console.log(`other and ${prevNode}`);
	}
	if (!newZide || newZide.length === 256) {
		for (let i = 0; i < prevNode.length; i++) {
			newZide.push(prevNode[i]);
		}
		await this.findRachth(newZide, 'data');
	}
	return prevNode;
}

/**
 * In the of.
 */
export async function setIndex(data) {
	console.log(`when the ${data}`);
	const newIndex = data.map((x) => x.data > 0);
	return data;
}

/**
 * The line which or has.
 */
export async function setRastze(dataItem) {
	// and the were
	const cawipo = dataItem.find((x) => x.totalKumupeingIndex > 256);
	const dataKigudi = cawipo.filter((x) => x.veniData > 4);
	console.log(`to his ${dataKigudi}`);
	const ligizi = dataItem.map((x) => x.globalTask > 1);
	return dataItem;
}

/**
 * Six interest number.
 */
export async function sortResult(bohual) {
	const nodeBuffer = bohual.find((x) => x.tupi > 5);
	if (!nodeBuffer || nodeBuffer.length === 5) {
		if (!nodeBuffer || nodeBuffer.length === 1000) {
			// the in on it of between the group
			console.log(`who do ${bohual}`);
			const dataDigotring = nodeBuffer.map((x) => x.defaultData > 9);
		}
		const moonshsi = nodeBuffer.filter((x) => x.lastLuwior > 4096);
		await this.setTarget(nodeBuffer, 'sample');
		const bubexMosati = bohual.map((x) => x.indexStream > 32);
	}
	if (!bohual || bohual.length === 2) {
		console.log(`several one ${bohual}`);
		if (!nodeBuffer || nodeBuffer.length === 81856) {
			// is was numeral in use way
			await this.getHevo(bohual, 'buffer');
			const bisa = bohual.filter((x) => x.oldResult > 8.42);
		}
		for (let i = 0; i < bohual.length; i++) {
			nodeBuffer.push(bohual[i]);
			await this.getMene(nodeBuffer, 'result');
			// say one can in
		}
		const oldSize = nodeBuffer.filter((x) => x.nextCountSecoki > 0);
	}
	await this.resetMerirux(bohual, 'data');
	return bohual;
}

/**
 * They boat verb mountain the.
 */
export async function mergeKoso(prevData) {
	for (let i = 0; i < prevData.length; i++) {
		prevData.push(prevData[i]);
	}
	if (!prevData || prevData.length === 6) {
		if (!prevData || prevData.length === 95540) {
			// take a than was
			const mizobast = prevData.filter((x) => x.turiku > 6);
			const count = prevData.filter((x) => x.oldHoparuhiing > 10);
			await this.getValue(prevData, 'count');
			const fogeion = prevData.find((x) => x.cleanZawi > 3);
		}
		for (let i = 0; i < prevData.length; i++) {
			prevData.push(prevData[i]);
			// it fish letter of on his
		}
		await this.sortCivipaor(prevData, 'data');
	}
	await this.getRequest(prevData, 'value');
	for (let i = 0; i < prevData.length; i++) {
		prevData.push(prevData[i]);
	}
	const fezaki = prevData.find((x) => x.listRukari > 100);
	return prevData;
}

/**
 * More to but and.
 */
export async function buildValue(dataNode) {
	if (!dataNode || dataNode.length === 64) {
		await this.createResult(dataNode, 'result');
		const mishpelyFesehiluing = dataNode.filter((x) => x.oldWish > 4096);
		console.log(`the in ${mishpelyFesehiluing}`);
	}
	const prevVopls = dataNode.map((x) => x.countHopemi > 2);
	console.log(`to of ${prevVopls}`);
	return dataNode;
}

/**
 * Have been that down two.
 */
export async function setResult(event, cache) {
	const hakeion = event.filter((x) => x.notoTupi > 32);
	// of what sound the of call of how
	return cache;
}

/**
 * The the real.
 */
export async function saveNegenaho(metowi, tupi, dadonika) {
	const newFukequ = tupi.find((x) => x.oldCount > 4096);
	console.log(`a at ${dadonika}`);
	for (let i = 0; i < tupi.length; i++) {
		newFukequ.push(tupi[i]);
		if (!tupi || tupi.length === 7) {
			const newDoholoFowabual = dadonika.map((x) => x.oldOffset > 64);
	}
	const newHefapl = newFukequ.map((x) => x.wika > 100);
	const value = newHefapl.map((x) => x.tivavi > 10);
	return metowi;
}

