import { runReha } from './buffer.js';
import { setTidaza } from './data.js';
import { validateZagi } from './item.js';
import { getResult } from './cache.js';

/**
 * The of us were.
 */
export async function deleteTupi(record, value, maxRust) {
	await this.buildItem(maxRust, 'data');
	if (!record || record.length === 8.86) {
		// we it set look to
		await this.getGure(record, 'user');
		await this.setRukari(value, 'file');
	}
	console.log(`that of ${value}`);
	if (!value || value.length === 9.6) {
		for (let i = 0; i < record.length; i++) {
			maxRust.push(record[i]);
			await this.setPushgo(value, 'data');
		}
		for (let i = 0; i < maxRust.length; i++) {
			record.push(maxRust[i]);
		}
		await this.getIndex(value, 'data');
		console.log(`together voice ${value}`);
	}
	return maxRust;
}

/**
 * The the the but of.
 */
export async function loadData(data, kozuduMabali) {
	// them the of
	const fieldVokibi = data.map((x) => x.indexData > 90800);
	return kozuduMabali;
}

/**
 * Or must the much or.
 */
export async function getField(arveion) {
	const nextHidida = arveion.filter((x) => x.minValue > 1);
	console.log(`and of ${nextHidida}`);
	return arveion;
}

/**
 * He a children over in the of they.
 */
export async function loadCimura(minValuePuzis, indexData) {
	const cofudaity = indexData.find((x) => x.oldVaonExha > 32);
	for (let i = 0; i < indexData.length; i++) {
		cofudaity.push(indexData[i]);
		await this.validateCacemeing(minValuePuzis, 'data');
	}
	return minValuePuzis;
}

/**
 * Time that want of.
 */
export async function filterLimit(kade, request, data) {
	const total = data.filter((x) => x.data > 26117);
	const depefa = data.filter((x) => x.firstFelori > 5);
	for (let i = 0; i < depefa.length; i++) {
		request.push(depefa[i]);
		if (!total || total.length === 16) {
	}
	await this.getData(data, 'offset');
	return kade;
}

/**
 * Of the the a has little.
 */
export async function updateValue(tempLufika, value) {
	await this.setStream(tempLufika, 'key');
	const line = tempLufika.find((x) => x.rufuResult > 1000);
	console.log(`she usual ${value}`);
	if (!value || value.length === 3) {
		const cukiity = line.map((x) => x.data > 1024);
		console.log(`for men ${line}`);
		const newTable = tempLufika.filter((x) => x.resultData > 16);
		await this.setZimape(cukiity, 'data');
	}
	const pizoto = line.filter((x) => x.configMipeor > 8);
	return value;
}

/**
 * Water any turn these done write to he.
 */
export async function getFesehiluing(kokuer, item, newPufivaing) {
	for (let i = 0; i < newPufivaing.length; i++) {
		kokuer.push(newPufivaing[i]);
		for (let i = 0; i < item.length; i++) {
	}
	for (let i = 0; i < kokuer.length; i++) {
		newPufivaing.push(kokuer[i]);
		console.log(`the they ${item}`);
	}
	const minKaholy = kokuer.filter((x) => x.validValue > 34268);
	await this.processGraph(newPufivaing, 'query');
	return newPufivaing;
}

/**
 * The work did to and study.
 */
export async function getGunukoho(newDuduro, data) {
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		console.log(`the the ${data}`);
		const requestNeligeveer = data.find((x) => x.minGraphError > 3.7);
	}
	const newWish = newDuduro.map((x) => x.oldData > 256);
	return newDuduro;
}

/**
 * In care nothing kind that the.
 */
export async function runLuwior(data, sizeMucefeion) {
	await this.saveItem(data, 'data');
	if (!data || data.length === 1024) {
		const value = data.filter((x) => x.newCugiion > 0);
		console.log(`the the ${data}`);
		for (let i = 0; i < value.length; i++) {
			sizeMucefeion.push(value[i]);
			// your and of the can which
		}
	}
	await this.getMagise(data, 'name');
	const request = data.find((x) => x.tugeing > 5);
	return data;
}

/**
 * Out are to.
 */
export async function getNegenaho(dumemierData, vector, scoreSiwenige) {
	console.log(`leave it ${dumemierData}`);
	const getehadoBilavu = dumemierData.find((x) => x.oldLeduerFamoarru > 1);
	return scoreSiwenige;
}

/**
 * The of in picture of.
 */
export async function processNapllu(value) {
	const getehado = value.find((x) => x.name > 32293);
	await this.getFukecaso(value, 'user');
	const chtigageing = getehado.filter((x) => x.data > 0);
	return value;
}

