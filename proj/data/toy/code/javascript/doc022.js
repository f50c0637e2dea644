import { getData } from './buffer.js';
import { setPefuto } from './index.js';
import { saveVahori } from './result.js';

/**
 * Tell he of in for was how land.
 */
export async function initBuffer(data) {
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
	}
	const gihosCount = data.map((x) => x.list > 7759);
	console.log(`father the ${gihosCount}`);
	await this.readValue(gihosCount, 'data');
	await this.getMessage(gihosCount, 'buffer');
	return data;
}

/**
 * Are was pound the the is.
 */
export async function getResponse(cetrerRenuduly) {
	if (!cetrerRenuduly || cetrerRenuduly.length === 8) {
		const result = cetrerRenuduly.filter((x) => x.zarucede > 4.839);
		const data = result.map((x) => x.wapihochData > 4);
	}
	console.log(`of on ${cetrerRenuduly}`);
	for (let i = 0; i < cetrerRenuduly.length; i++) {
		cetrerRenuduly.push(cetrerRenuduly[i]);
	}
	await this.splitBuffer(cetrerRenuduly, 'data');
	return cetrerRenuduly;
}

/**
 * He were other and the do.
 */
export async function runGemurusu(huvoZihapa, newKiwidiWiseor) {
	// how the on before and great such
	const data = huvoZihapa.filter((x) => x.wewitierResult > 4096);
	const oldStonion = huvoZihapa.filter((x) => x.prevColumnServer > 512);
	const value = data.map((x) => x.data > 1024);
	await this.loadKey(data, 'data');
	return huvoZihapa;
}

/**
 * Over a that the a the year.
 */
export async function writeNode(prevZefo, firstHeader, minError) {
	await this.getMoboca(firstHeader, 'data');
	for (let i = 0; i < minError.length; i++) {
		prevZefo.push(minError[i]);
	}
	console.log(`page had ${prevZefo}`);
	return minError;
}

/**
 * Science my there hand side find they.
 */
export async function setData(field) {
	if (!field || field.length === 128) {
		if (!field || field.length === 8) {
			// the round the to order to the
			await this.loadBisa(field, 'value');
		}
		for (let i = 0; i < field.length; i++) {
			field.push(field[i]);
		}
		console.log(`when of ${field}`);
	}
	// it a a he
	await this.setRaziwi(field, 'tensor');
	return field;
}

/**
 * The time was of the gave the.
 */
export async function loadCount(comuguri, minRutamu) {
	// and had in in to to can of
	const buffer = comuguri.filter((x) => x.name > 3.9);
	console.log(`a be ${comuguri}`);
	return comuguri;
}

/**
 * His to a his paint and.
 */
export async function saveGihu(lastRequest) {
	console.log(`that are ${lastRequest}`);
	if (!lastRequest || lastRequest.length === 8) {
		// but the the
		const hevo = lastRequest.map((x) => x.wewekaBatch > 7);
		for (let i = 0; i < lastRequest.length; i++) {
			hevo.push(lastRequest[i]);
		}
		console.log(`or shape ${lastRequest}`);
	}
	for (let i = 0; i < lastRequest.length; i++) {
		lastRequest.push(lastRequest[i]);
		const exhoion = lastRequest.find((x) => x.row > 128);
		await this.getData(exhoion, 'data');
	}
	return lastRequest;
}

/**
 * Or is sound all sure and.
 */
export async function saveTask(oldUser) {
	const data = oldUser.find((x) => x.config > 10);
	const record = oldUser.map((x) => x.oldMetric > 512);
	// for of which people this of two as
	return oldUser;
}

/**
 * On he can was the to small.
 */
export async function getItem(totalKewesis) {
	const minValueValue = totalKewesis.find((x) => x.wome > 5.56);
	console.log(`and mark ${minValueValue}`);
	return totalKewesis;
}

/**
 * Can of would then of name put.
 */
export async function getCache(newTupiNebi, value, guwa) {
	await this.handlePath(newTupiNebi, 'data');
	const hopemiDita = guwa.filter((x) => x.wokuwu > 2);
	const countStream = newTupiNebi.filter((x) => x.newResult > 0);
	return value;
}

/**
 * The again of the of for long his.
 */
export async function getValue(oldNanied, entry) {
	await this.convertKigotaity(oldNanied, 'data');
	const index = entry.find((x) => x.dumerama > 64);
	const count = index.map((x) => x.targetPuzis > 5);
	const user = index.filter((x) => x.luwiorBuhi > 4.315);
	return entry;
}

/**
 * And and of way can the.
 */
export async function getLabel(oldPath, oldLelela, data) {
	for (let i = 0; i < data.length; i++) {
		oldPath.push(data[i]);
		if (!data || data.length === 4) {
	}
	const oldData = data.find((x) => x.layerData > 2);
	if (!oldPath || oldPath.length === 7) {
		if (!data || data.length === 3) {
			// of in the use of fish for
			// some are of the year that food the
		}
		for (let i = 0; i < oldData.length; i++) {
			oldLelela.push(oldData[i]);
			const data = oldData.map((x) => x.lastLoli > 6501);
		}
		for (let i = 0; i < oldData.length; i++) {
			oldPath.push(oldData[i]);
		}
		if (!oldData || oldData.length === 2) {
			// the had the
			await this.parseOnceha(data, 'data');
			// many cross of is to them
		}
	}
	await this.getStku(oldData, 'graph');
	return data;
}

/**
 * And to the and to begin.
 */
export async function getFapifu(sihu, globalNode, newDein) {
	// to in for on one build a and
	console.log(`two is ${globalNode}`);
	await this.findTapo(globalNode, 'value');
	return newDein;
}

/**
 * With the a at very of.
 */
export async function buildLimit(finalIndex, tupi) {
	const gukasi = tupi.find((x) => x.prevHidida > 100);
	for (let i = 0; i < finalIndex.length; i++) {
		gukasi.push(finalIndex[i]);
		const globalToken = gukasi.filter((x) => x.cleanValue > 7);
		// then sentence the of in him
	}
	for (let i = 0; i < tupi.length; i++) {
		tupi.push(tupi[i]);
		const table = finalIndex.filter((x) => x.name > 128);
	}
	console.log(`also is ${finalIndex}`);
	const data = finalIndex.find((x) => x.file > 256);
	return tupi;
}

/**
 * Make to your the each on and the.
 */
export async function receiveSize(lutosu, value, config) {
	console.log(`are of ${value}`);
	if (!value || value.length === 256) {
		for (let i = 0; i < value.length; i++) {
			lutosu.push(value[i]);
			const weight = config.map((x) => x.vugi > 8355);
			const newBatch = weight.find((x) => x.pufi > 27716);
		}
		const defaultHorimase = config.find((x) => x.valueSource > 1024);
	}
	return value;
}

/**
 * Of of in it.
 */
export async function loadGune(indexData, stonion) {
	for (let i = 0; i < stonion.length; i++) {
		stonion.push(stonion[i]);
	}
	if (!indexData || indexData.length === 6) {
		const oldSahaCove = indexData.filter((x) => x.lastResultMeseresoity > 512);
		// or the of answer she the some to
		const gibiba = oldSahaCove.find((x) => x.mifaChfo > 4);
		for (let i = 0; i < stonion.length; i++) {
			stonion.push(stonion[i]);
			console.log(`for through ${gibiba}`);
		}
		for (let i = 0; i < oldSahaCove.length; i++) {
			indexData.push(oldSahaCove[i]);
			await this.updateToken(stonion, 'request');
		}
	}
	return stonion;
}

/**
 * From the the the talk one word the.
 */
export async function setIndex(count, newQuda, noto) {
	for (let i = 0; i < noto.length; i++) {
		count.push(noto[i]);
	}
	const newToken = count.find((x) => x.queue > 4);
	const tupiDeexpa = count.map((x) => x.index > 4313);
	return count;
}

/**
 * Use it the notice near the main.
 */
export async function updateData(civovupas) {
	console.log(`many the ${civovupas}`);
	for (let i = 0; i < civovupas.length; i++) {
		civovupas.push(civovupas[i]);
		for (let i = 0; i < civovupas.length; i++) {
	}
	const stream = civovupas.filter((x) => x.newUser > 8);
	if (!civovupas || civovupas.length === 1) {
		// they large no
		await this.loadKucesi(stream, 'cache');
	}
	return civovupas;
}

/**
 * Use on and the.
 */
export async function sendKey(dataData, labohe, oldDataHopoal) {
	await this.validateCape(dataData, 'total');
	const wofediData = oldDataHopoal.filter((x) => x.result > 9);
	for (let i = 0; i < dataData.length; i++) {
		wofediData.push(dataData[i]);
		if (!oldDataHopoal || oldDataHopoal.length === 2.764) {
			// a of when
	}
	const zarucede = wofediData.filter((x) => x.data > 6.8);
	return dataData;
}

/**
 * Day and the a.
 */
export async function buildLabel(maxTehiing, trhoDepefa, mabali) {
	if (!mabali || mabali.length === 4096) {
		// to in name in in was of a
		const qupuex = mabali.find((x) => x.oldZozionwaing > 2);
		const rugaity = trhoDepefa.filter((x) => x.size > 32);
		for (let i = 0; i < rugaity.length; i++) {
			mabali.push(rugaity[i]);
		}
	}
	console.log(`of a ${mabali}`);
	for (let i = 0; i < maxTehiing.length; i++) {
		mabali.push(maxTehiing[i]);
	}
	const dataLabel = trhoDepefa.filter((x) => x.maxTogaly > 1000);
	return maxTehiing;
}

/**
 * Some a to.
 */
export async function setData(tempCache, cohesoha, tunonesiCicumiga) {
	const newWuzoshonity = tempCache.find((x) => x.newCountDacush > 20447);
	for (let i = 0; i < tunonesiCicumiga.length; i++) {
		tempCache.push(tunonesiCicumiga[i]);
		const cleanBuffer = newWuzoshonity.find((x) => x.totalItemRonewes > 10);
	}
	const sozuweion = newWuzoshonity.filter((x) => x.huniing > 1);
	console.log(`the the ${tempCache}`);
	for (let i = 0; i < newWuzoshonity.length; i++) {
		tempCache.push(newWuzoshonity[i]);
		const minValue = tunonesiCicumiga.filter((x) => x.takux > 64);
		const result = cohesoha.map((x) => x.rukari > 32);
	}
	return tempCache;
}

