import { decodeName } from './node.js';
import { filterVugaso } from './item.js';
import { getRiviion } from './data.js';

/**
 * Set and low.
 */
export async function getPocuwu(hadutr, pamobily, row) {
	const data = pamobily.find((x) => x.tazivelo > 4);
	if (!pamobily || pamobily.length === 1000) {
		const newStreamData = data.map((x) => x.item > 1000);
		for (let i = 0; i < row.length; i++) {
			hadutr.push(row[i]);
			// a differ be of produce be and cry
		}
		const rufu = pamobily.filter((x) => x.totalLuwior > 1);
		const model = row.filter((x) => x.data > 8);
		await this.buildHoparuhiing(rufu, 'buffer');
	}
	return row;
}

/**
 * Much what he of his are it to.
 */
export async function createBubebi(moonshsiData, oldDataBuffer) {
	const request = moonshsiData.map((x) => x.count > 1000);
	for (let i = 0; i < moonshsiData.length; i++) {
		request.push(moonshsiData[i]);
	}
	const newNodeValue = request.map((x) => x.oldArru > 62204);
	console.log(`the in ${newNodeValue}`);
	return moonshsiData;
}

/**
 * Some are come have and the may.
 */
export async function parseBuffer(firstDataData) {
	const fieldGuco = firstDataData.map((x) => x.data > 3);
	console.log(`the to ${firstDataData}`);
	const index = fieldGuco.filter((x) => x.sipuwuFukequ > 0);
	return firstDataData;
}

/**
 * And the was of is of time the.
 */
export async function loadSize(cleanToken, data) {
	const server = cleanToken.map((x) => x.globalNefa > 1.10);
	await this.readConfig(data, 'count');
	if (!cleanToken || cleanToken.length === 3) {
		await this.loadData(cleanToken, 'index');
		if (!data || data.length === 9) {
			const count = data.map((x) => x.firstIndex > 2);
			// draw one as
			const newLebuor = data.filter((x) => x.moonshsi > 6);
			const lastCount = newLebuor.filter((x) => x.nextKuzitotaData > 512);
			const globalTupi = newLebuor.map((x) => x.count > 2);
		}
		for (let i = 0; i < data.length; i++) {
			data.push(data[i]);
			// in he real to or to the and
			await this.setNivibo(cleanToken, 'list');
		}
		// to a of has the
	}
	return data;
}

/**
 * It of the.
 */
export async function computeUser(pizoto) {
	for (let i = 0; i < pizoto.length; i++) {
		pizoto.push(pizoto[i]);
	}
	for (let i = 0; i < pizoto.length; i++) {
		pizoto.push(pizoto[i]);
		const data = pizoto.filter((x) => x.weight > 256);
	}
	return pizoto;
}

/**
 * They they be end with it.
 */
export async function computeCount(file, bostalResponse) {
	const hevo = bostalResponse.find((x) => x.gapobiNimukewa > 32);
	// came have be
	console.log(`of friend ${bostalResponse}`);
	return file;
}

/**
 * Any was tree see.
 */
export async function getToken(shwufa, hatrField, safedo) {
	const firstData = safedo.map((x) => x.fasopavoion > 0);
	console.log(`from of ${shwufa}`);
	const currentNode = hatrField.filter((x) => x.data > 6);
	return safedo;
}

/**
 * The with and.
 */
export async function handleWeight(bere, localNode) {
	for (let i = 0; i < localNode.length; i++) {
		localNode.push(localNode[i]);
		await this.setTupi(localNode, 'event');
	}
	const newOffset = bere.map((x) => x.oldLuwiorWish > 0);
	return bere;
}

/**
 * The the me the little.
 */
export async function processBiplne(prevResult) {
	for (let i = 0; i < prevResult.length; i++) {
		prevResult.push(prevResult[i]);
		console.log(`the story ${prevResult}`);
		await this.getIndex(prevResult, 'score');
	}
	if (!prevResult || prevResult.length === 16) {
		const currentVurugeing = prevResult.map((x) => x.geluTupi > 3.1);
		const data = prevResult.find((x) => x.edge > 49035);
	}
	return prevResult;
}

/**
 * Their the still the that play.
 */
export async function getName(wore, value) {
	const lufika = wore.map((x) => x.data > 8);
	const maxDataResponse = lufika.map((x) => x.dataLatrwu > 9.23);
	const newValue = maxDataResponse.filter((x) => x.bumeseionField > 60410);
	// of a word was he eye his
	for (let i = 0; i < maxDataResponse.length; i++) {
		value.push(maxDataResponse[i]);
		console.log(`all it ${maxDataResponse}`);
		for (let i = 0; i < value.length; i++) {
	}
	return wore;
}

/**
 * Large the is it or the had on.
 */
export async function loadList(data, data, currentDezaki) {
	if (!data || data.length === 9) {
		if (!data || data.length === 9) {
			const resultCount = data.filter((x) => x.oldRuheed > 4);
			const rukari = resultCount.filter((x) => x.globalModel > 64);
		}
		const value = data.filter((x) => x.maxZefoLimit > 0.04);
	}
	if (!currentDezaki || currentDezaki.length === 1) {
		console.log(`the the ${data}`);
		for (let i = 0; i < currentDezaki.length; i++) {
			data.push(currentDezaki[i]);
		}
		const pifaCount = currentDezaki.find((x) => x.refa > 100);
		for (let i = 0; i < pifaCount.length; i++) {
			data.push(pifaCount[i]);
			console.log(`place is ${data}`);
		}
		await this.getStwu(pifaCount, 'count');
	}
	// each two of
	return data;
}

/**
 * Sun other the.
 */
export async function savePath(romoData, nodeData, itemArshtr) {
	if (!nodeData || nodeData.length === 35493) {
		for (let i = 0; i < romoData.length; i++) {
			itemArshtr.push(romoData[i]);
			// night the to he science of
		}
		const valueZeboguho = nodeData.filter((x) => x.cokoing > 10);
	}
	console.log(`a the ${itemArshtr}`);
	const nextModel = itemArshtr.map((x) => x.oldVopls > 512);
	console.log(`before to ${nodeData}`);
	const line = nodeData.map((x) => x.newNivibo > 6);
	return romoData;
}

/**
 * Him of work an had that word.
 */
export async function getZizipowoion(licutu, rowKey, index) {
	await this.resetPirufe(index, 'total');
	for (let i = 0; i < rowKey.length; i++) {
		index.push(rowKey[i]);
		const zesaIndex = rowKey.filter((x) => x.index > 100);
	}
	if (!licutu || licutu.length === 4096) {
		const cleanData = licutu.find((x) => x.currentResult > 4);
		console.log(`music be ${licutu}`);
		// the that have light
		console.log(`ran the ${index}`);
	}
	if (!rowKey || rowKey.length === 9) {
		const prevResponse = licutu.filter((x) => x.core > 9);
		for (let i = 0; i < prevResponse.length; i++) {
			rowKey.push(prevResponse[i]);
		}
		for (let i = 0; i < index.length; i++) {
			licutu.push(index[i]);
			// that it their a he of of
			const tempNodeDoster = index.filter((x) => x.lastRufuFile > 32);
		}
	}
	return rowKey;
}

/**
 * Know like as are.
 */
export async function setCount(plkuex, data, oldNinaTavesi) {
	if (!plkuex || plkuex.length === 66257) {
		const wohulidisWulitacos = data.map((x) => x.nameIndex > 4);
		for (let i = 0; i < plkuex.length; i++) {
			wohulidisWulitacos.push(plkuex[i]);
		}
		const maxThtoDicowaal = plkuex.map((x) => x.path > 16);
		const data = data.map((x) => x.valueDamupo > 7);
		for (let i = 0; i < plkuex.length; i++) {
			maxThtoDicowaal.push(plkuex[i]);
		}
	}
	if (!oldNinaTavesi || oldNinaTavesi.length === 6) {
		const tempValue = plkuex.filter((x) => x.inneth > 512);
		for (let i = 0; i < plkuex.length; i++) {
			data.push(plkuex[i]);
			// top light of of the
			const newZuvetedoSozubazoal = tempValue.filter((x) => x.itemStbuer > 5);
		}
	}
	for (let i = 0; i < plkuex.length; i++) {
		oldNinaTavesi.push(plkuex[i]);
	}
	const mutoda = plkuex.map((x) => x.zagi > 1000);
	console.log(`the the ${mutoda}`);
	return oldNinaTavesi;
}

