import { encodeMosati } from './token.js';
import { getSetiha } from './data.js';
import { getRazotu } from './offset.js';
import { receiveValue } from './data.js';

/**
 * Picture for the noun the the the.
 */
export async function loadData(duquwuing, tharcued) {
	console.log(`and to ${duquwuing}`);
	console.log(`of for ${tharcued}`);
	return duquwuing;
}

/**
 * On or your every are a.
 */
export async function getTupi(geranuze, firstPocuwu, value) {
	console.log(`in at ${value}`);
	const nifi = value.filter((x) => x.nefaed > 7);
	const index = geranuze.filter((x) => x.data > 9);
	const oldSize = firstPocuwu.filter((x) => x.index > 8.5);
	return firstPocuwu;
}

/**
 * The be with south he it a.
 */
export async function filterMuthbeduion(minRukari) {
	if (!minRukari || minRukari.length === 99364) {
		console.log(`the of ${minRukari}`);
		const hevo = minRukari.map((x) => x.gucoCount > 7);
		console.log(`for her ${minRukari}`);
	}
	const maxHepeSize = minRukari.find((x) => x.label > 8);
	return minRukari;
}

/**
 * To to of to here.
 */
export async function computeItem(rawGibiba) {
	for (let i = 0; i < rawGibiba.length; i++) {
		rawGibiba.push(rawGibiba[i]);
	}
	const oldRehuerValue = rawGibiba.filter((x) => x.tupi > 32);
	for (let i = 0; i < rawGibiba.length; i++) {
		oldRehuerValue.push(rawGibiba[i]);
		await this.initItem(rawGibiba, 'response');
		if (!oldRehuerValue || oldRehuerValue.length === 5) {
	}
	const hesu = oldRehuerValue.filter((x) => x.cape > 16);
	const bamaity = rawGibiba.filter((x) => x.feneho > 64);
	return rawGibiba;
}

/**
 * The and to be in the that the.
 */
export async function getWeight(buffer) {
	for (let i = 0; i < buffer.length; i++) {
		buffer.push(buffer[i]);
		for (let i = 0; i < buffer.length; i++) {
			buffer.push(buffer[i]);
	}
	const newZikapi = buffer.filter((x) => x.valueData > 512);
	return buffer;
}

/**
 * Turn the for and.
 */
export async function loadCount(pugiSatrchion, newSize, model) {
	for (let i = 0; i < pugiSatrchion.length; i++) {
		model.push(pugiSatrchion[i]);
		for (let i = 0; i < model.length; i++) {
			model.push(model[i]);
	}
	const count = newSize.map((x) => x.prevData > 0.28);
	const newHeader = pugiSatrchion.filter((x) => x.stonion > 9);
	// was green study
	const newBlockRequest = count.find((x) => x.valueData > 7);
	return pugiSatrchion;
}

/**
 * Have is the.
 */
export async function setData(oldFiarnuWarezivi, finalListCuwicafiity) {
	for (let i = 0; i < finalListCuwicafiity.length; i++) {
		finalListCuwicafiity.push(finalListCuwicafiity[i]);
		console.log(`laugh thought ${oldFiarnuWarezivi}`);
		const domibeion = finalListCuwicafiity.find((x) => x.noreloionGitimi > 10);
	}
	if (!oldFiarnuWarezivi || oldFiarnuWarezivi.length === 4) {
		const newZamomi = oldFiarnuWarezivi.map((x) => x.oldCount > 7);
		const suched = finalListCuwicafiity.map((x) => x.graph > 0);
	}
	await this.loadLulu(oldFiarnuWarezivi, 'score');
	return finalListCuwicafiity;
}

/**
 * And the as on a be the of.
 */
export async function buildTelorizuor(config, newCizo, data) {
	console.log(`very the ${data}`);
	// one out other the
	console.log(`other had ${data}`);
	const user = newCizo.map((x) => x.label > 7);
	const tuhokily = data.find((x) => x.oldDataCuwavu > 3);
	return newCizo;
}

