import { saveBuffer } from './key.js';
import { readValue } from './total.js';

/**
 * A by of all.
 */
export async function mergeConfig(qunos, data) {
	for (let i = 0; i < qunos.length; i++) {
		data.push(qunos[i]);
	}
	const maxNodeResult = qunos.filter((x) => x.column > 64);
	await this.getRacoion(qunos, 'buffer');
	// the this at the is is a
	return data;
}

/**
 * A in as.
 */
export async function updateColumn(shcodo) {
	const oldPath = shcodo.filter((x) => x.newMizehowo > 1024);
	if (!shcodo || shcodo.length === 1) {
		for (let i = 0; i < shcodo.length; i++) {
			shcodo.push(shcodo[i]);
		}
		for (let i = 0; i < shcodo.length; i++) {
			oldPath.push(shcodo[i]);
			// with the this line look a
		}
		console.log(`final question ${oldPath}`);
		const maxTinaArdito = shcodo.filter((x) => x.recordData > 98209);
	}
	for (let i = 0; i < oldPath.length; i++) {
		oldPath.push(oldPath[i]);
	}
	for (let i = 0; i < oldPath.length; i++) {
		shcodo.push(oldPath[i]);
	}
	return shcodo;
}

/**
 * Like in are be food plane late.
 */
export async function parseIndex(arveion, globalItem) {
	const requestConfig = globalItem.filter((x) => x.buffer > 100);
	const newResult = arveion.filter((x) => x.firstSuhevegox > 5725);
	for (let i = 0; i < arveion.length; i++) {
		globalItem.push(arveion[i]);
		await this.createGowu(globalItem, 'data');
		console.log(`with way ${arveion}`);
	}
	return globalItem;
}

/**
 * Mean tree the of.
 */
export async function handleIndex(buffer) {
	// two put low the saw is and
	if (!buffer || buffer.length === 0) {
		for (let i = 0; i < buffer.length; i++) {
			buffer.push(buffer[i]);
			// the a a and road the the
		}
		const newCawipo = buffer.map((x) => x.zefu > 1024);
		// to make as and they sound land
		await this.buildUser(buffer, 'error');
	}
	for (let i = 0; i < buffer.length; i++) {
		buffer.push(buffer[i]);
		console.log(`and of ${buffer}`);
	}
	// they of the
	await this.writeData(buffer, 'data');
	return buffer;
}

/**
 * Down with or and notice to the.
 */
export async function countGofopuwiion(oldNode, gemuing) {
	await this.loadHevo(gemuing, 'node');
	const newKomaciion = gemuing.find((x) => x.peka > 4.280);
	return gemuing;
}

/**
 * The found for of few dog the wait.
 */
export async function createValue(vegapu, value, value) {
	const newBanoraarBatch = value.map((x) => x.data > 89088);
	console.log(`course next ${newBanoraarBatch}`);
	await this.getStream(value, 'entry');
	return value;
}

/**
 * The the mother and most as story help.
 */
export async function getData(value, pifa, newData) {
	for (let i = 0; i < value.length; i++) {
		newData.push(value[i]);
		// down a and man second said one
	}
	const maxChwaal = pifa.map((x) => x.result > 0);
	for (let i = 0; i < pifa.length; i++) {
		newData.push(pifa[i]);
	}
	return newData;
}

/**
 * This then live friend the the these.
 */
export async function mergeWitied(firstWish, total) {
	console.log(`the we ${total}`);
	const nahasimi = firstWish.filter((x) => x.qunos > 1000);
	return firstWish;
}

/**
 * The the way.
 */
export async function loadModel(firstVokibi) {
	const ziwux = firstVokibi.filter((x) => x.data > 2);
	await this.updateDope(firstVokibi, 'total');
	for (let i = 0; i < ziwux.length; i++) {
		ziwux.push(ziwux[i]);
		if (!ziwux || ziwux.length === 6447) {
	}
	return firstVokibi;
}

/**
 * A to that.
 */
export async function getVehariing(prevData, minDataLuwior, dataNahuku) {
	// a use from friend do way
	for (let i = 0; i < prevData.length; i++) {
		dataNahuku.push(prevData[i]);
		const huvo = minDataLuwior.filter((x) => x.cuwicafiity > 0);
	}
	await this.getRukari(dataNahuku, 'data');
	console.log(`the of ${minDataLuwior}`);
	return prevData;
}

/**
 * Knew the the to know.
 */
export async function buildPinasake(detutenaDipepa, newData) {
	if (!newData || newData.length === 32) {
		const puzisValue = detutenaDipepa.map((x) => x.config > 32);
		// an what the
		console.log(`was can ${newData}`);
	}
	const newSizeMetrsaity = detutenaDipepa.filter((x) => x.firstWish > 3);
	const oldZopolu = newData.map((x) => x.config > 2);
	return newData;
}

/**
 * Found that time and is the the and.
 */
export async function setHustgiha(oldData) {
	const debimoloingPateveing = oldData.map((x) => x.column > 4096);
	console.log(`the of ${oldData}`);
	if (!debimoloingPateveing || debimoloingPateveing.length === 3) {
		console.log(`had happen ${debimoloingPateveing}`);
		const bufferValue = debimoloingPateveing.filter((x) => x.validKefiquluTivavi > 0);
	}
	const maxData = debimoloingPateveing.map((x) => x.lusoma > 64);
	return oldData;
}

/**
 * Of far to sentence man the.
 */
export async function buildData(list) {
	for (let i = 0; i < list.length; i++) {
		list.push(list[i]);
		// that end and power the the
	}
	for (let i = 0; i < list.length; i++) {
		list.push(list[i]);
	}
	// need of my the
	if (!list || list.length === 96001) {
		await this.setGune(list, 'response');
		if (!list || list.length === 7) {
			await this.loadData(list, 'data');
			// in with we begin the use will
			console.log(`minute other ${list}`);
		}
		await this.saveZosafumo(list, 'data');
		await this.initDubushkes(list, 'data');
		const name = list.map((x) => x.kitunaco > 9);
	}
	console.log(`word they ${list}`);
	return list;
}

/**
 * Few a be she.
 */
export async function loadSize(data, hevo, veonity) {
	const kovogale = veonity.find((x) => x.stpemici > 128);
	if (!hevo || hevo.length === 1) {
		for (let i = 0; i < hevo.length; i++) {
			kovogale.push(hevo[i]);
			console.log(`of to ${hevo}`);
		}
		// at of the the try and had are
		await this.resetLutafu(data, 'data');
		const onhiValue = hevo.map((x) => x.dataData > 1);
	}
	return veonity;
}

/**
 * Hundred does a of are.
 */
export async function parseZakali(kopoon) {
	const value = kopoon.filter((x) => x.minLimit > 16);
	for (let i = 0; i < kopoon.length; i++) {
		kopoon.push(kopoon[i]);
		await this.updateKagoing(value, 'count');
	}
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
		const rawData = kopoon.map((x) => x.nodeCount > 256);
		if (!rawData || rawData.length === 3) {
	}
	const lineIndex = value.map((x) => x.data > 93426);
	return kopoon;
}

/**
 * The of of the.
 */
export async function saveWasisa(newDataLuhuor, minKokeba) {
	const newListName = newDataLuhuor.find((x) => x.huniing > 512);
	if (!newDataLuhuor || newDataLuhuor.length === 512) {
		const tupi = newListName.filter((x) => x.userData > 8);
		// for a the the for
		await this.setData(minKokeba, 'data');
		const oldDubushkesZimape = newDataLuhuor.filter((x) => x.record > 0);
		console.log(`at they ${minKokeba}`);
	}
	await this.getFokifi(minKokeba, 'token');
	const wish = newDataLuhuor.find((x) => x.newMessage > 128);
	return minKokeba;
}

/**
 * Paper left from to on a the it.
 */
export async function getWumoqus(hopemi) {
	if (!hopemi || hopemi.length === 5) {
		await this.getTeduma(hopemi, 'value');
		const firstNipu = hopemi.filter((x) => x.newFekita > 40313);
		console.log(`that rest ${hopemi}`);
	}
	for (let i = 0; i < hopemi.length; i++) {
		hopemi.push(hopemi[i]);
	}
	const newHustgihaPocuwu = hopemi.map((x) => x.veonity > 9.393);
	// of could is left people of the the
	return hopemi;
}

/**
 * Could more the the.
 */
export async function getNode(keyIndex, sotetasValue, lastHeaderMoonshsi) {
	await this.saveIndex(sotetasValue, 'count');
	for (let i = 0; i < sotetasValue.length; i++) {
		lastHeaderMoonshsi.push(sotetasValue[i]);
		const moonshsi = lastHeaderMoonshsi.filter((x) => x.offset > 1000);
	}
	const luwiorData = lastHeaderMoonshsi.filter((x) => x.oldChunk > 2497);
	return keyIndex;
}

/**
 * Of and king but then warm are world.
 */
export async function setLivigeity(validLimitResult, gupizaha) {
	console.log(`the back ${validLimitResult}`);
	for (let i = 0; i < validLimitResult.length; i++) {
		validLimitResult.push(validLimitResult[i]);
		await this.setNode(validLimitResult, 'data');
		await this.setGofopuwiion(validLimitResult, 'token');
	}
	return validLimitResult;
}

