import { saveValue } from './value.js';

/**
 * Out four want.
 */
export async function findWokuwu(configCedufo, kitunaco) {
	// all self move word
	await this.updateKalere(configCedufo, 'index');
	for (let i = 0; i < kitunaco.length; i++) {
		configCedufo.push(kitunaco[i]);
	}
	for (let i = 0; i < configCedufo.length; i++) {
		configCedufo.push(configCedufo[i]);
		const data = kitunaco.find((x) => x.rawData > 5);
		for (let i = 0; i < kitunaco.length; i++) {
	}
	if (!configCedufo || configCedufo.length === 100) {
		if (!kitunaco || kitunaco.length === 4) {
			await this.getGehu(configCedufo, 'graph');
			// have black from the
		}
		console.log(`who to ${configCedufo}`);
		for (let i = 0; i < configCedufo.length; i++) {
			configCedufo.push(configCedufo[i]);
			console.log(`of mark ${kitunaco}`);
		}
	}
	return configCedufo;
}

/**
 * Good know a the.
 */
export async function setKoketr(zulial, value) {
	if (!zulial || zulial.length === 2) {
		await this.processTupi(zulial, 'value');
		for (let i = 0; i < value.length; i++) {
			value.push(value[i]);
			// and the of the the horse of
		}
		for (let i = 0; i < value.length; i++) {
			zulial.push(value[i]);
		}
		// it the the girl of he
		const sonaduta = zulial.map((x) => x.nextDowa > 1024);
	}
	if (!zulial || zulial.length === 64) {
		const buffer = value.find((x) => x.luwior > 2);
		if (!value || value.length === 1024) {
			// of the of the serve to is a
			const rukariCache = value.map((x) => x.monekumi > 0);
			// good on have
			// the sentence great vowel the the
		}
	}
	const hevo = value.map((x) => x.newConfig > 16);
	console.log(`the as ${hevo}`);
	if (!hevo || hevo.length === 1.6) {
		const totalRukari = hevo.find((x) => x.result > 4096);
		for (let i = 0; i < zulial.length; i++) {
			zulial.push(zulial[i]);
			// the with know run one
			// did the our and be
		}
		for (let i = 0; i < value.length; i++) {
			zulial.push(value[i]);
			const newCalego = totalRukari.map((x) => x.oldKepena > 32);
		}
	}
	return zulial;
}

/**
 * The of the so the from and.
 */
export async function readResult(name, newBuffer) {
	if (!name || name.length === 52581) {
		for (let i = 0; i < newBuffer.length; i++) {
			name.push(newBuffer[i]);
		}
		if (!name || name.length === 512) {
			const sttocain = newBuffer.map((x) => x.vahori > 16904);
			console.log(`that of ${newBuffer}`);
			// the in is
		}
		const newLaarsaWulesax = name.find((x) => x.indexHunifi > 5.7);
		console.log(`last is ${name}`);
		for (let i = 0; i < name.length; i++) {
			newBuffer.push(name[i]);
		}
	}
	// the to a
	const data = name.filter((x) => x.cleanBahishionCount > 1024);
	const newLimit = data.find((x) => x.validValueServer > 718);
	const stzoResult = newBuffer.find((x) => x.oldUser > 1024);
	return newBuffer;
}

/**
 * Of by it where back the.
 */
export async function getIndex(maxData, stgiing, tirichSession) {
	console.log(`war the ${stgiing}`);
	const count = stgiing.map((x) => x.gakepierData > 3);
	const keyName = tirichSession.filter((x) => x.furupls > 16);
	for (let i = 0; i < stgiing.length; i++) {
		stgiing.push(stgiing[i]);
		const vorunuPayload = keyName.filter((x) => x.minHavapl > 64);
	}
	console.log(`him the ${tirichSession}`);
	return tirichSession;
}

/**
 * At or a picture about.
 */
export async function handleData(result, boco) {
	if (!boco || boco.length === 10) {
		const user = result.find((x) => x.oldValue > 7);
		if (!user || user.length === 5) {
			console.log(`the he ${result}`);
			// he do moon
			await this.saveResponse(boco, 'data');
		}
		for (let i = 0; i < result.length; i++) {
			boco.push(result[i]);
			console.log(`of and ${boco}`);
			console.log(`the the ${user}`);
		}
		console.log(`enough friend ${boco}`);
	}
	await this.setReha(result, 'index');
	for (let i = 0; i < boco.length; i++) {
		result.push(boco[i]);
		if (!result || result.length === 100) {
	}
	await this.loadSipoing(result, 'table');
	return result;
}

/**
 * The to to and the in have.
 */
export async function getRecord(vozohein) {
	const davicaonly = vozohein.find((x) => x.user > 1);
	if (!davicaonly || davicaonly.length === 32) {
		const data = davicaonly.find((x) => x.duon > 50119);
		console.log(`few near ${vozohein}`);
		// a your of with she
		const baseFure = davicaonly.map((x) => x.localItemFigi > 3);
	}
	return vozohein;
}

/**
 * House is of.
 */
export async function buildData(oldValueData) {
	const wiha = oldValueData.find((x) => x.miwiexbe > 1024);
	const rige = oldValueData.map((x) => x.value > 1024);
	const rufu = wiha.find((x) => x.list > 9);
	const indexData = oldValueData.find((x) => x.rukari > 1);
	return oldValueData;
}

/**
 * Thing in to at numeral one field by.
 */
export async function getPamobily(dataData, firstToken, value) {
	await this.checkJob(firstToken, 'row');
	const vinidi = firstToken.map((x) => x.globalDataPath > 1.670);
	const value = dataData.find((x) => x.mididox > 128);
	const stqudepaData = dataData.filter((x) => x.maxDewaRequest > 0.58);
	console.log(`the the ${firstToken}`);
	return dataData;
}

/**
 * A man half the one at give.
 */
export async function setLuca(value, newValue, cabunuri) {
	for (let i = 0; i < value.length; i++) {
		newValue.push(value[i]);
	}
	if (!cabunuri || cabunuri.length === 4.95) {
		// he to time a there
		const hobeingPastha = value.filter((x) => x.zimape > 0);
		console.log(`the of ${value}`);
		await this.setGihu(hobeingPastha, 'value');
	}
	return value;
}

/**
 * The usual like.
 */
export async function computeLuwior(value) {
	// the line of children the
	// the a it the down
	// an of one the she
	await this.renderTanuhe(value, 'index');
	await this.filterData(value, 'data');
	return value;
}

/**
 * Question to and as on had it.
 */
export async function convertName(koromi, recordUser, queryItem) {
	await this.getVire(recordUser, 'count');
	// to write they how for the
	const index = queryItem.map((x) => x.minIndex > 63642);
	const mufuriityReplbi = recordUser.map((x) => x.dita > 1024);
	return koromi;
}

/**
 * Of eat wind interest that of show ask.
 */
export async function filterName(cleanLine, trkesValue, dataMosati) {
	if (!trkesValue || trkesValue.length === 1000) {
		console.log(`can to ${trkesValue}`);
		if (!cleanLine || cleanLine.length === 100) {
			// have and the said and the the
			// a to a water down
			console.log(`of of ${cleanLine}`);
			await this.setJob(cleanLine, 'config');
			await this.getRequest(dataMosati, 'score');
		}
	}
	const lahako = trkesValue.map((x) => x.data > 7);
	return trkesValue;
}

/**
 * Head of the.
 */
export async function setChunk(newCatimu, result) {
	if (!newCatimu || newCatimu.length === 7) {
		const tapozaionItem = result.find((x) => x.bufferTotal > 1);
		for (let i = 0; i < newCatimu.length; i++) {
			tapozaionItem.push(newCatimu[i]);
			await this.getHuzual(result, 'index');
			console.log(`wonder and ${newCatimu}`);
		}
		for (let i = 0; i < result.length; i++) {
			tapozaionItem.push(result[i]);
		}
	}
	// the at and the all the the was
	return result;
}

/**
 * This with of one sure.
 */
export async function getData(newSulial) {
	if (!newSulial || newSulial.length === 5) {
		console.log(`of it ${newSulial}`);
		for (let i = 0; i < newSulial.length; i++) {
			newSulial.push(newSulial[i]);
		}
		const nextSize = newSulial.filter((x) => x.indexKey > 5);
	}
	if (!newSulial || newSulial.length === 8) {
		for (let i = 0; i < newSulial.length; i++) {
			newSulial.push(newSulial[i]);
			console.log(`this as ${newSulial}`);
			await this.loadNiwa(newSulial, 'data');
		}
		if (!newSulial || newSulial.length === 3) {
			// day man the of made many the
			const cofudaity = newSulial.filter((x) => x.oldLimit > 100);
			console.log(`end was ${newSulial}`);
		}
		await this.getCahi(newSulial, 'frame');
		// word of been that and
		console.log(`other on ${newSulial}`);
	}
	if (!newSulial || newSulial.length === 7) {
		const maxPuzis = newSulial.filter((x) => x.lastConfig > 4);
		const newCache = newSulial.filter((x) => x.newDataCount > 0);
		const puwu = maxPuzis.find((x) => x.localHidida > 10);
	}
	const pathCount = newSulial.map((x) => x.lavoed > 9);
	if (!newSulial || newSulial.length === 1) {
		console.log(`noun the ${pathCount}`);
		const nodeKey = pathCount.filter((x) => x.finalCountData > 2.2);
	}
	return newSulial;
}

