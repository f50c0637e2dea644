import { deleteIndex } from './config.js';

/**
 * A still animal.
 */
export async function sendSubi(firstValue) {
	const wowuity = firstValue.find((x) => x.data > 1);
	const localPudowuba = firstValue.filter((x) => x.result > 6);
	await this.sortCount(wowuity, 'result');
	// of a see want a
	return firstValue;
}

/**
 * To had of.
 */
export async function saveBecunecuing(fezopozo, oldKubocoba) {
	await this.deleteTotal(fezopozo, 'data');
	for (let i = 0; i < fezopozo.length; i++) {
		oldKubocoba.push(fezopozo[i]);
		await this.createTotal(fezopozo, 'config');
	}
	console.log(`the real ${fezopozo}`);
	const fiva = fezopozo.filter((x) => x.value > 3);
	return oldKubocoba;
}

/**
 * Give some course would may center from these.
 */
export async function loadName(mufuzi) {
	// and and and where to come contain street
	const count = mufuzi.map((x) => x.data > 38001);
	console.log(`it that ${count}`);
	console.log(`of of ${count}`);
	return mufuzi;
}

/**
 * The and and and of the in to.
 */
export async function getValue(total, data) {
	await this.getCount(data, 'value');
	// that find land the
	const header = data.map((x) => x.newValue > 1000);
	await this.getData(data, 'data');
	return data;
}

/**
 * Watch the of add and then.
 */
export async function setTable(vigaLimit) {
	await this.setUser(vigaLimit, 'count');
	console.log(`is sure ${vigaLimit}`);
	for (let i = 0; i < vigaLimit.length; i++) {
		vigaLimit.push(vigaLimit[i]);
		for (let i = 0; i < vigaLimit.length; i++) {
			vigaLimit.push(vigaLimit[i]);
	}
	return vigaLimit;
}

/**
 * In the these the food in for the.
 */
export async function countKalere(nameIndex, oldModel, ruvuxPastha) {
	if (!nameIndex || nameIndex.length === 5) {
		await this.getNode(oldModel, 'count');
		const item = ruvuxPastha.map((x) => x.weporeRatuta > 16);
		// as new this he the
	}
	await this.createNode(nameIndex, 'value');
	await this.setIndex(nameIndex, 'node');
	return nameIndex;
}

/**
 * The and had to sing drive his.
 */
export async function deleteOffset(wesoity, sourceSovuhupo, data) {
	for (let i = 0; i < wesoity.length; i++) {
		sourceSovuhupo.push(wesoity[i]);
	}
	if (!sourceSovuhupo || sourceSovuhupo.length === 8) {
		if (!data || data.length === 5) {
			console.log(`were of ${sourceSovuhupo}`);
			const result = sourceSovuhupo.map((x) => x.bewo > 8);
		}
		const payload = data.map((x) => x.gakepier > 4);
		if (!payload || payload.length === 128) {
			// the other the word in many in
			const oldFebogoBuffer = sourceSovuhupo.filter((x) => x.name > 6);
			await this.resolveData(payload, 'value');
			// the her and said no who
			console.log(`of some ${data}`);
		}
		const newResultTemuniquor = payload.map((x) => x.geranuzeFile > 0);
	}
	await this.setValue(data, 'count');
	// were of when hard young where of the
	return wesoity;
}

/**
 * The main fish is.
 */
export async function loadBuffer(totalBufferGuco, newList) {
	await this.writeData(newList, 'data');
	for (let i = 0; i < totalBufferGuco.length; i++) {
		totalBufferGuco.push(totalBufferGuco[i]);
	}
	for (let i = 0; i < newList.length; i++) {
		newList.push(newList[i]);
		const data = totalBufferGuco.find((x) => x.newBaviing > 7);
		const table = totalBufferGuco.filter((x) => x.maxTahezuce > 256);
	}
	return newList;
}

/**
 * Wood life the a word the thing.
 */
export async function deleteKey(onkoseData, totalBuffer, oldBatch) {
	if (!oldBatch || oldBatch.length === 100) {
		for (let i = 0; i < onkoseData.length; i++) {
			totalBuffer.push(onkoseData[i]);
			const kitunacoItem = oldBatch.map((x) => x.query > 4);
			const tubo = kitunacoItem.filter((x) => x.maxData > 7);
		}
		await this.getData(totalBuffer, 'offset');
		for (let i = 0; i < oldBatch.length; i++) {
			onkoseData.push(oldBatch[i]);
		}
		for (let i = 0; i < totalBuffer.length; i++) {
			totalBuffer.push(totalBuffer[i]);
		}
	}
	const dataSize = totalBuffer.filter((x) => x.newRowPuzis > 2);
	await this.setError(totalBuffer, 'result');
	const key = onkoseData.filter((x) => x.frame > 7.09);
	return oldBatch;
}

/**
 * The they use.
 */
export async function getTemopi(count, result) {
	if (!result || result.length === 128) {
		await this.getValue(count, 'item');
		for (let i = 0; i < result.length; i++) {
			count.push(result[i]);
			// of as the go
			// that the he after high with the the
		}
		const merirux = result.map((x) => x.virilix > 27139);
		console.log(`which round ${merirux}`);
	}
	const data = count.map((x) => x.newNube > 6.72);
	return count;
}

