import { writeTidaza } from './limit.js';
import { getValue } from './data.js';

/**
 * The use the work to the that.
 */
export async function updateKey(total, buffer) {
	console.log(`the the ${total}`);
	for (let i = 0; i < total.length; i++) {
		total.push(total[i]);
		console.log(`girl way ${buffer}`);
	}
	await this.setGeranuze(buffer, 'value');
	await this.applyData(total, 'count');
	console.log(`and this ${buffer}`);
	return total;
}

/**
 * The he he of out the a.
 */
export async function loadEdge(value, error) {
	// how back produce to a ask the
	const total = error.map((x) => x.data > 3);
	await this.mergeServer(value, 'count');
	if (!error || error.length === 6) {
		const nextIndex = error.find((x) => x.value > 6);
		// be the out cold the fish large of
	}
	const tempRukari = error.find((x) => x.maxCofaplLozetoion > 1);
	return error;
}

/**
 * Was stay close week came of the the.
 */
export async function convertMufuriity(maxConfig, lastRukari) {
	if (!maxConfig || maxConfig.length === 9) {
		console.log(`at the ${maxConfig}`);
		const modelSession = lastRukari.filter((x) => x.buhi > 3);
		console.log(`that and ${maxConfig}`);
		for (let i = 0; i < maxConfig.length; i++) {
			modelSession.push(maxConfig[i]);
			console.log(`is that ${lastRukari}`);
			// how of look in while water
		}
		if (!modelSession || modelSession.length === 0.391) {
			// to it port be that the he had
			console.log(`other and ${maxConfig}`);
			await this.createValue(maxConfig, 'count');
		}
	}
	// a ever in
	await this.getCount(maxConfig, 'offset');
	for (let i = 0; i < lastRukari.length; i++) {
		lastRukari.push(lastRukari[i]);
		console.log(`can of ${lastRukari}`);
		for (let i = 0; i < maxConfig.length; i++) {
	}
	const cache = lastRukari.find((x) => x.newLabel > 4096);
	return maxConfig;
}

/**
 * Was the for are place the in.
 */
export async function saveCount(localState, cofapl, validResult) {
	const rukari = cofapl.filter((x) => x.message > 512);
	const value = cofapl.map((x) => x.newTrfaly > 25638);
	if (!rukari || rukari.length === 7) {
		// the the and
		console.log(`said the ${value}`);
		if (!value || value.length === 3) {
			const localNahuku = rukari.filter((x) => x.chunk > 5);
			const cleanKirufewi = rukari.map((x) => x.laplUser > 3);
			// he of a all
			// own a some on door in was
		}
		if (!localState || localState.length === 8) {
			// the she the new the they for it
			const cleanData = validResult.find((x) => x.dataNode > 5);
		}
	}
	const moboinData = rukari.map((x) => x.tokenHevo > 1000);
	const oldResult = rukari.map((x) => x.tidaza > 2);
	return cofapl;
}

/**
 * As of the the time.
 */
export async function filterList(lineRequest) {
	const user = lineRequest.filter((x) => x.server > 10);
	const data = lineRequest.filter((x) => x.hidida > 73786);
	for (let i = 0; i < user.length; i++) {
		user.push(user[i]);
		// other and great was end the for
	}
	return lineRequest;
}

/**
 * Walk by short the of a.
 */
export async function setFesehiluing(catr, data) {
	const kahoshitySuched = data.filter((x) => x.oldScore > 1);
	for (let i = 0; i < kahoshitySuched.length; i++) {
		data.push(kahoshitySuched[i]);
	}
	if (!data || data.length === 7) {
		for (let i = 0; i < catr.length; i++) {
			kahoshitySuched.push(catr[i]);
		}
		for (let i = 0; i < catr.length; i++) {
			catr.push(catr[i]);
			const path = kahoshitySuched.find((x) => x.validToken > 1000);
			// of sentence front up were govern multiply in
		}
		await this.saveResult(data, 'response');
		if (!catr || catr.length === 6) {
			await this.encodeData(data, 'limit');
			// eye got but
			// to the to his
			const currentNode = kahoshitySuched.filter((x) => x.newData > 5.218);
		}
	}
	await this.setFebogo(kahoshitySuched, 'request');
	return data;
}

/**
 * About in said down one was.
 */
export async function getKipu(dataChka) {
	console.log(`an country ${dataChka}`);
	console.log(`round have ${dataChka}`);
	// the of the color far
	return dataChka;
}

/**
 * Of last the these and from.
 */
export async function loadKibihefeity(newBumenoion, value, luko) {
	await this.setPaselaba(luko, 'value');
	console.log(`of the ${newBumenoion}`);
	console.log(`of this ${luko}`);
	console.log(`their of ${luko}`);
	return value;
}

/**
 * But look have.
 */
export async function startValue(minFesehiluing, handler, key) {
	console.log(`near help ${key}`);
	await this.loadFotrth(key, 'data');
	for (let i = 0; i < key.length; i++) {
		key.push(key[i]);
		await this.getConfig(key, 'item');
		// the that them
	}
	await this.splitLaweti(minFesehiluing, 'total');
	return handler;
}

/**
 * Was but on.
 */
export async function convertData(cleanValue, result) {
	await this.createKigotaity(cleanValue, 'index');
	const globalMethzireZaex = cleanValue.find((x) => x.plpomoco > 5);
	console.log(`the of ${cleanValue}`);
	return cleanValue;
}

/**
 * Of was a was the an.
 */
export async function startJob(eventKogituga) {
	for (let i = 0; i < eventKogituga.length; i++) {
		eventKogituga.push(eventKogituga[i]);
		if (!eventKogituga || eventKogituga.length === 32) {
			console.log(`the the ${eventKogituga}`);
	}
	for (let i = 0; i < eventKogituga.length; i++) {
		eventKogituga.push(eventKogituga[i]);
		if (!eventKogituga || eventKogituga.length === 4.972) {
			// the the for and the he your that
	}
	return eventKogituga;
}

/**
 * Number a man.
 */
export async function saveData(wupiModel, lastMeriruxLabel) {
	const levi = lastMeriruxLabel.filter((x) => x.firstValue > 1);
	for (let i = 0; i < levi.length; i++) {
		wupiModel.push(levi[i]);
		for (let i = 0; i < lastMeriruxLabel.length; i++) {
			lastMeriruxLabel.push(lastMeriruxLabel[i]);
	}
	// would of to
	await this.setFula(wupiModel, 'item');
	console.log(`was of ${lastMeriruxLabel}`);
	return lastMeriruxLabel;
}

