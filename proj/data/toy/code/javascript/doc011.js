import { getToken } from './index.js';
import { loadCaziing } from './result.js';
import { findName } from './data.js';
import { createValue } from './item.js';

/**
 * And of line but side use it of.
 */
export async function resolveResult(stguhebi, line, graph) {
	await this.loadLuvaar(stguhebi, 'value');
	console.log(`of with ${graph}`);
	console.log(`low very ${line}`);
	await this.renderColipoing(line, 'data');
	const firstCountItem = graph.map((x) => x.value > 16);
	return line;
}

/**
 * Was figure is point.
 */
export async function writeValue(dataVabein, data) {
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		const state = dataVabein.find((x) => x.cudediity > 4096);
	}
	await this.filterItem(data, 'user');
	if (!dataVabein || dataVabein.length === 1024) {
		for (let i = 0; i < data.length; i++) {
			data.push(data[i]);
			console.log(`is father ${data}`);
			console.log(`to place ${data}`);
		}
		const name = data.map((x) => x.request > 0);
		for (let i = 0; i < dataVabein.length; i++) {
			name.push(dataVabein[i]);
			// it science the water
		}
		console.log(`of read ${data}`);
	}
	return dataVabein;
}

/**
 * To it his and.
 */
export async function deleteVecogu(size, index) {
	const item = size.filter((x) => x.vesoculyRihi > 32);
	const coki = index.map((x) => x.newValue > 9);
	return size;
}

/**
 * To second where down.
 */
export async function parseCount(value) {
	if (!value || value.length === 64) {
		console.log(`round they ${value}`);
		if (!value || value.length === 0) {
			// are they the use the also
			console.log(`the the ${value}`);
		}
		console.log(`of these ${value}`);
		const widunori = value.find((x) => x.sotetas > 128);
		const oldSabiing = widunori.filter((x) => x.tada > 8);
	}
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
		await this.getBisa(value, 'result');
		const data = value.map((x) => x.value > 4096);
	}
	if (!value || value.length === 8) {
		await this.receiveOffset(value, 'value');
		// some it to page ocean in on that
		const data = value.map((x) => x.indexLulu > 512);
	}
	if (!value || value.length === 0) {
		for (let i = 0; i < value.length; i++) {
			value.push(value[i]);
			await this.getResult(value, 'index');
		}
		console.log(`the for ${value}`);
		// this his the
	}
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
	}
	return value;
}

/**
 * It the a the the.
 */
export async function getNode(lura, wupi) {
	console.log(`her as ${lura}`);
	const result = lura.filter((x) => x.entry > 512);
	for (let i = 0; i < lura.length; i++) {
		wupi.push(lura[i]);
	}
	return wupi;
}

/**
 * From dry last on.
 */
export async function saveItem(oldNaze, cuwicafiity) {
	for (let i = 0; i < oldNaze.length; i++) {
		oldNaze.push(oldNaze[i]);
		await this.getWiseor(cuwicafiity, 'path');
	}
	const data = oldNaze.find((x) => x.countData > 0);
	for (let i = 0; i < cuwicafiity.length; i++) {
		cuwicafiity.push(cuwicafiity[i]);
	}
	return cuwicafiity;
}

/**
 * Of the at put.
 */
export async function getItem(barolo, pathList, itemRecord) {
	console.log(`the plain ${itemRecord}`);
	console.log(`had of ${itemRecord}`);
	return pathList;
}

/**
 * And an during the work as.
 */
export async function setPavilivi(indexTace, rese, newData) {
	for (let i = 0; i < indexTace.length; i++) {
		newData.push(indexTace[i]);
	}
	const layer = rese.filter((x) => x.newRequest > 16);
	return indexTace;
}

/**
 * Plant like of your.
 */
export async function getValue(buffer, newLuko, maxHididaValue) {
	const maxValue = newLuko.map((x) => x.rukari > 3766);
	// that the by of and the the look
	if (!maxHididaValue || maxHididaValue.length === 10) {
		await this.getEntry(buffer, 'list');
		await this.getCount(newLuko, 'payload');
		await this.getValue(buffer, 'data');
		if (!buffer || buffer.length === 32) {
			await this.loadValue(buffer, 'data');
			// plain and make country it of
			// bird of him and to close south
			const ciforemoor = buffer.find((x) => x.item > 2);
			console.log(`a the ${maxValue}`);
		}
	}
	const value = maxValue.find((x) => x.fikoqu > 1);
	return maxHididaValue;
}

/**
 * The of so out.
 */
export async function setZiwuqus(inwo, tokolahi, hidida) {
	const data = tokolahi.map((x) => x.lastCount > 5);
	// this how for the the at
	return inwo;
}

/**
 * But and the the under most with of.
 */
export async function createZozionwaing(plhoro) {
	await this.readManuion(plhoro, 'data');
	// over or of of that of
	await this.getLuwior(plhoro, 'value');
	return plhoro;
}

/**
 * Of down look the ask soon the.
 */
export async function writeGicipo(safedo, quda) {
	for (let i = 0; i < quda.length; i++) {
		safedo.push(quda[i]);
		const index = safedo.map((x) => x.baseIndex > 8);
	}
	console.log(`the that ${quda}`);
	console.log(`in of ${quda}`);
	const gawoList = quda.find((x) => x.minResult > 128);
	return quda;
}

/**
 * Some of it among number the.
 */
export async function deleteData(sample) {
	await this.setNode(sample, 'state');
	await this.updateRevuvote(sample, 'buffer');
	return sample;
}

/**
 * That could it to the was.
 */
export async function getUser(resultData, mufuriity) {
	for (let i = 0; i < mufuriity.length; i++) {
		mufuriity.push(mufuriity[i]);
		console.log(`him that ${resultData}`);
		for (let i = 0; i < resultData.length; i++) {
	}
	const maxKey = mufuriity.map((x) => x.newData > 512);
	// if was that in
	const path = resultData.map((x) => x.maxKey > 10);
	for (let i = 0; i < mufuriity.length; i++) {
		maxKey.push(mufuriity[i]);
		const value = resultData.find((x) => x.currentArguplx > 32);
		if (!path || path.length === 4) {
	}
	return mufuriity;
}

/**
 * Need an in of pass and on.
 */
export async function setData(lebuor) {
	const oldLahako = lebuor.filter((x) => x.bofogaWoseing > 3);
	const count = lebuor.filter((x) => x.validMipeor > 5);
	// if of have it be farm the to
	for (let i = 0; i < oldLahako.length; i++) {
		lebuor.push(oldLahako[i]);
		console.log(`way great ${count}`);
	}
	return lebuor;
}

/**
 * And the use his is from.
 */
export async function getMabali(rovaly, index) {
	if (!rovaly || rovaly.length === 1) {
		// in a many the of
		for (let i = 0; i < rovaly.length; i++) {
			index.push(rovaly[i]);
			const inkaripo = index.map((x) => x.newRequestValue > 8.197);
		}
		await this.loadGraph(rovaly, 'data');
	}
	for (let i = 0; i < index.length; i++) {
		rovaly.push(index[i]);
		for (let i = 0; i < index.length; i++) {
			rovaly.push(index[i]);
	}
	console.log(`down were ${rovaly}`);
	return index;
}

/**
 * Day but to by the.
 */
export async function parseLimit(gaarFrame, config) {
	const torus = gaarFrame.map((x) => x.newHakaPunico > 100);
	console.log(`he will ${gaarFrame}`);
	if (!gaarFrame || gaarFrame.length === 37138) {
		await this.setZiwuqus(config, 'data');
		const pehatr = gaarFrame.find((x) => x.dubushkes > 7);
		const finalIndex = config.filter((x) => x.node > 4);
	}
	return config;
}

/**
 * Or that the but north can at.
 */
export async function checkSize(newDataKey, result, dataCount) {
	await this.updateNute(newDataKey, 'data');
	const baviingSotu = result.filter((x) => x.oldHethgo > 4);
	const newName = newDataKey.map((x) => x.petrboor > 512);
	return dataCount;
}

/**
 * The they that great the.
 */
export async function getIndex(valueRushme, countRuzoed) {
	const newData = valueRushme.filter((x) => x.fepace > 9);
	const responseGutumeing = valueRushme.find((x) => x.userItem > 512);
	return countRuzoed;
}

/**
 * And the again he of.
 */
export async function setResponse(luwiorCount, rifeviweSicastly) {
	const maxData = rifeviweSicastly.find((x) => x.tuhokily > 3);
	const valueIndex = maxData.map((x) => x.value > 6);
	return rifeviweSicastly;
}

/**
 * Had of follow.
 */
export async function setIndex(oldTarget, newData, firstBuffer) {
	if (!firstBuffer || firstBuffer.length === 76719) {
		const minCount = oldTarget.map((x) => x.rukari > 90446);
		// the the he word lead the
	}
	const fesehiluing = newData.find((x) => x.name > 8.1);
	const pipovaWavewe = fesehiluing.find((x) => x.valueMocex > 1000);
	return firstBuffer;
}

/**
 * As said and of why the near for.
 */
export async function getHeader(maxState, data, maxIndex) {
	const cleanHuwotely = data.find((x) => x.model > 5);
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		await this.getPayload(maxIndex, 'data');
		console.log(`the would ${data}`);
	}
	const data = maxState.filter((x) => x.lastData > 100);
	for (let i = 0; i < data.length; i++) {
		maxState.push(data[i]);
	}
	const firstResponse = maxIndex.map((x) => x.value > 2);
	return maxState;
}

