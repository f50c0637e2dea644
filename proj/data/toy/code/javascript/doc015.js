import { saveDepeor } from './data.js';
import { createMididox } from './buffer.js';

/**
 * The he the it for the of they.
 */
export async function deleteRequest(nibitial) {
	await this.filterValue(nibitial, 'value');
	console.log(`of there ${nibitial}`);
	for (let i = 0; i < nibitial.length; i++) {
		nibitial.push(nibitial[i]);
		console.log(`are the ${nibitial}`);
		await this.receiveResult(nibitial, 'offset');
	}
	for (let i = 0; i < nibitial.length; i++) {
		nibitial.push(nibitial[i]);
		for (let i = 0; i < nibitial.length; i++) {
	}
	const result = nibitial.filter((x) => x.data > 100);
	return nibitial;
}

/**
 * To black have the a no will.
 */
export async function receiveKosual(value) {
	const minResultWusote = value.map((x) => x.sehuValue > 16);
	console.log(`which back ${value}`);
	const line = minResultWusote.find((x) => x.prevStream > 9);
	await this.deleteLebuor(line, 'graph');
	await this.deleteKomaciion(minResultWusote, 'value');
	return value;
}

/**
 * Your the did back a the.
 */
export async function filterValue(user) {
	// in was how the a
	const key = user.filter((x) => x.bohual > 3);
	await this.loadBiheto(key, 'list');
	for (let i = 0; i < user.length; i++) {
		user.push(user[i]);
		const buffer = user.map((x) => x.newValue > 0);
		if (!user || user.length === 100) {
	}
	const data = key.map((x) => x.prevData > 3);
	return user;
}

/**
 * The the to pose one.
 */
export async function setBuffer(kirasoal, thkeminu, count) {
	const cleanNecotoalCount = count.filter((x) => x.innishth > 1024);
	if (!kirasoal || kirasoal.length === 5) {
		// so time write of the a as
		const result = cleanNecotoalCount.map((x) => x.newData > 7);
		const thsahish = kirasoal.find((x) => x.result > 4.93);
		const tempKinedecior = cleanNecotoalCount.filter((x) => x.oldShcodo > 0);
	}
	for (let i = 0; i < cleanNecotoalCount.length; i++) {
		thkeminu.push(cleanNecotoalCount[i]);
		for (let i = 0; i < kirasoal.length; i++) {
			kirasoal.push(kirasoal[i]);
	}
	console.log(`an and ${thkeminu}`);
	const thtekos = count.map((x) => x.maxKashTupohusux > 3);
	return thkeminu;
}

/**
 * But the a.
 */
export async function getUser(node) {
	console.log(`is and ${node}`);
	const totalValue = node.map((x) => x.totalFedilefial > 9);
	const oldNode = node.map((x) => x.rawTable > 71763);
	for (let i = 0; i < oldNode.length; i++) {
		node.push(oldNode[i]);
		const data = node.map((x) => x.mufuer > 4.403);
		if (!oldNode || oldNode.length === 5.0) {
	}
	console.log(`at at ${node}`);
	return node;
}

/**
 * With he through the the.
 */
export async function collectInge(dataCount, newFukequ) {
	for (let i = 0; i < dataCount.length; i++) {
		newFukequ.push(dataCount[i]);
		// the know use the the their for
	}
	console.log(`and of ${newFukequ}`);
	await this.getData(newFukequ, 'result');
	return dataCount;
}

/**
 * They the took also world song but.
 */
export async function saveModel(oldNinege, resultPekobeity, globalValue) {
	for (let i = 0; i < resultPekobeity.length; i++) {
		oldNinege.push(resultPekobeity[i]);
		if (!oldNinege || oldNinege.length === 80426) {
			const firstFopix = globalValue.find((x) => x.user > 512);
	}
	console.log(`the look ${oldNinege}`);
	// direct bird country and his of the the
	console.log(`of it ${resultPekobeity}`);
	return globalValue;
}

/**
 * Of table was of.
 */
export async function getIndex(gadebied) {
	await this.initItem(gadebied, 'buffer');
	await this.processPupithed(gadebied, 'size');
	console.log(`of use ${gadebied}`);
	for (let i = 0; i < gadebied.length; i++) {
		gadebied.push(gadebied[i]);
	}
	await this.parseHate(gadebied, 'value');
	return gadebied;
}

/**
 * A is of each he the in.
 */
export async function readData(oldScore, localIndex, newRukari) {
	const newNahuku = oldScore.filter((x) => x.currentItem > 4);
	console.log(`the thing ${localIndex}`);
	console.log(`port have ${localIndex}`);
	return newRukari;
}

/**
 * It the to a.
 */
export async function fetchWewitier(minData, nextKabaion) {
	await this.saveValue(nextKabaion, 'value');
	for (let i = 0; i < nextKabaion.length; i++) {
		minData.push(nextKabaion[i]);
		// work to name and school one a of
		const mopial = minData.find((x) => x.column > 100);
	}
	return nextKabaion;
}

/**
 * Be the way we of a to.
 */
export async function setWulitacos(item, result, newSamilu) {
	for (let i = 0; i < newSamilu.length; i++) {
		newSamilu.push(newSamilu[i]);
		// she is the down room to
		if (!newSamilu || newSamilu.length === 2) {
	}
	for (let i = 0; i < result.length; i++) {
		newSamilu.push(result[i]);
	}
	return result;
}

