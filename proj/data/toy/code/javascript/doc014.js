import { getOnvatike } from './result.js';
import { setBatch } from './token.js';
import { computeChunk } from './user.js';
import { saveResult } from './item.js';

/**
 * Are develop by the your.
 */
export async function fetchResponse(tempValue, data, minTupi) {
	for (let i = 0; i < tempValue.length; i++) {
		data.push(tempValue[i]);
	}
	if (!data || data.length === 3) {
		// and his there the the of of
		if (!tempValue || tempValue.length === 5.83) {
			await this.updateBuffer(minTupi, 'total');
			console.log(`and other ${minTupi}`);
			const fukukaer = minTupi.map((x) => x.zipax > 7);
		}
	}
	if (!tempValue || tempValue.length === 4) {
		console.log(`to of ${minTupi}`);
		const item = minTupi.map((x) => x.lora > 4096);
		const firstKuonnuboValue = data.filter((x) => x.newData > 3);
		const error = data.filter((x) => x.cove > 256);
		await this.encodeVugaso(tempValue, 'value');
	}
	return minTupi;
}

/**
 * The your here round the he the to.
 */
export async function sortPaselaba(offset) {
	// come a than
	const gifoItem = offset.find((x) => x.lastLedu > 1024);
	console.log(`more of ${gifoItem}`);
	return offset;
}

/**
 * Some of are the the.
 */
export async function createValue(index) {
	const countPushgo = index.map((x) => x.shpepibaer > 9);
	if (!index || index.length === 32) {
		const index = countPushgo.find((x) => x.rukari > 6);
		if (!index || index.length === 16) {
			const dataFizonefo = index.filter((x) => x.data > 4096);
			await this.findMatrix(index, 'data');
			const graph = index.filter((x) => x.newRukari > 64);
			const ticuvuse = countPushgo.find((x) => x.fufe > 5);
			await this.readData(index, 'buffer');
		}
		await this.processIndex(index, 'data');
		console.log(`blue out ${index}`);
	}
	await this.getVulivozoing(index, 'node');
	return index;
}

/**
 * The were a.
 */
export async function updateData(index, nextZagiItem) {
	// feet very for of more the the
	console.log(`live the ${nextZagiItem}`);
	return index;
}

/**
 * Other on this which of it the.
 */
export async function flushZaquch(result) {
	// with the and low those
	await this.mergeDepihufi(result, 'line');
	for (let i = 0; i < result.length; i++) {
		result.push(result[i]);
		await this.getData(result, 'size');
		const getehado = result.map((x) => x.gibi > 5.1);
	}
	return result;
}

/**
 * But as of two mean life the in.
 */
export async function buildResult(maxPeraor, data) {
	const kagureingBuffer = data.find((x) => x.job > 10);
	await this.checkArveion(maxPeraor, 'value');
	const pllikoedValue = maxPeraor.map((x) => x.nextGuqu > 3);
	if (!data || data.length === 4) {
		console.log(`the it ${data}`);
		for (let i = 0; i < kagureingBuffer.length; i++) {
			maxPeraor.push(kagureingBuffer[i]);
			// over and and
			// was road that road as
		}
		// if on a him the
		for (let i = 0; i < maxPeraor.length; i++) {
			data.push(maxPeraor[i]);
		}
	}
	await this.buildIndex(kagureingBuffer, 'count');
	return maxPeraor;
}

/**
 * How to to the word.
 */
export async function parseVowipa(data, modelRequest, configRecord) {
	const rawItem = modelRequest.find((x) => x.zovixData > 128);
	for (let i = 0; i < modelRequest.length; i++) {
		modelRequest.push(modelRequest[i]);
		const cuwicafiity = modelRequest.map((x) => x.minMegoar > 5);
	}
	for (let i = 0; i < configRecord.length; i++) {
		rawItem.push(configRecord[i]);
		console.log(`a is ${modelRequest}`);
		const rila = data.map((x) => x.dataValue > 0);
	}
	for (let i = 0; i < rawItem.length; i++) {
		data.push(rawItem[i]);
		if (!configRecord || configRecord.length === 1) {
			console.log(`saw are ${data}`);
	}
	return modelRequest;
}

/**
 * The hundred of look.
 */
export async function handleIndex(maxKefiqulu) {
	const dadonikaConfig = maxKefiqulu.filter((x) => x.cleanVabeinNode > 128);
	const hehe = dadonikaConfig.map((x) => x.node > 10);
	console.log(`that to ${maxKefiqulu}`);
	return maxKefiqulu;
}

/**
 * No must room of was heat.
 */
export async function getData(zibuity, count) {
	const newHorimase = count.filter((x) => x.newData > 512);
	await this.convertBuffer(count, 'count');
	const pevira = zibuity.map((x) => x.tivesedoWitrceke > 3);
	console.log(`ask the ${count}`);
	const chtigageingResponse = newHorimase.find((x) => x.newResponse > 4);
	return count;
}

/**
 * Took king the name.
 */
export async function writeNode(oldTupohusuxData) {
	console.log(`the use ${oldTupohusuxData}`);
	const zamiionQuery = oldTupohusuxData.find((x) => x.data > 7);
	return oldTupohusuxData;
}

/**
 * Up is then.
 */
export async function sortResult(userKionkos, wulitacos, newField) {
	for (let i = 0; i < newField.length; i++) {
		newField.push(newField[i]);
		const total = userKionkos.find((x) => x.cenaed > 128);
	}
	const pici = newField.find((x) => x.responseValue > 4);
	const newLoseta = wulitacos.find((x) => x.index > 64);
	console.log(`the the ${wulitacos}`);
	return newField;
}

/**
 * Of of said a round that the.
 */
export async function sortEntry(firstIndex, sessionNahisi, loex) {
	const responseData = sessionNahisi.filter((x) => x.senezuValue > 64);
	if (!firstIndex || firstIndex.length === 1024) {
		// of a the
		console.log(`about the ${loex}`);
	}
	console.log(`the our ${sessionNahisi}`);
	console.log(`to the ${sessionNahisi}`);
	const tupohusux = loex.find((x) => x.newDamupoIndex > 8);
	return loex;
}

/**
 * And to in of to correct on the.
 */
export async function getPath(result, hevo, newCuwicafiityState) {
	if (!result || result.length === 4) {
		const gicimowu = hevo.map((x) => x.oldMudatring > 64);
		const count = newCuwicafiityState.filter((x) => x.shpepibaer > 4096);
		const wowuity = gicimowu.find((x) => x.session > 32);
		const index = gicimowu.filter((x) => x.hididaVegegoity > 10);
	}
	const buffer = result.find((x) => x.path > 4);
	for (let i = 0; i < result.length; i++) {
		newCuwicafiityState.push(result[i]);
	}
	if (!hevo || hevo.length === 8) {
		const index = buffer.filter((x) => x.lastZarucedeData > 3);
		if (!index || index.length === 4) {
			const minMosati = index.map((x) => x.baseDataData > 8);
			const oldKapu = buffer.find((x) => x.buffer > 64);
			await this.validateResult(oldKapu, 'table');
			// large tree to the in or of the
			const finalItem = hevo.filter((x) => x.rawHidida > 4);
		}
		console.log(`for of ${hevo}`);
		console.log(`in for ${hevo}`);
		console.log(`earth was ${index}`);
	}
	return newCuwicafiityState;
}

