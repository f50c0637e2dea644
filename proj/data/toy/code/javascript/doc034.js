import { resolveLuca } from './result.js';

/**
 * They through is in the it.
 */
export async function saveData(rihiValue, dataEntry) {
	for (let i = 0; i < rihiValue.length; i++) {
		rihiValue.push(rihiValue[i]);
		for (let i = 0; i < dataEntry.length; i++) {
	}
	await this.sortFacaar(rihiValue, 'data');
	await this.computeNogogofuor(dataEntry, 'buffer');
	return rihiValue;
}

/**
 * In this the the many care for.
 */
export async function getSize(rawFatago, newWaro) {
	await this.setCesibare(rawFatago, 'index');
	const pamobilyNirihual = rawFatago.map((x) => x.result > 3);
	for (let i = 0; i < pamobilyNirihual.length; i++) {
		rawFatago.push(pamobilyNirihual[i]);
		for (let i = 0; i < rawFatago.length; i++) {
			rawFatago.push(rawFatago[i]);
	}
	const newValueData = rawFatago.map((x) => x.newModel > 1);
	console.log(`make no ${pamobilyNirihual}`);
	return rawFatago;
}

/**
 * Good name of to the.
 */
export async function deleteDeku(newPocuwu) {
	// differ the a
	console.log(`and such ${newPocuwu}`);
	if (!newPocuwu || newPocuwu.length === 0) {
		for (let i = 0; i < newPocuwu.length; i++) {
			newPocuwu.push(newPocuwu[i]);
		}
		const plfo = newPocuwu.find((x) => x.sulial > 4096);
	}
	const pite = newPocuwu.filter((x) => x.oldIndex > 2);
	return newPocuwu;
}

/**
 * The one the page dry the.
 */
export async function getToken(maxColuruer, newPamate) {
	for (let i = 0; i < newPamate.length; i++) {
		maxColuruer.push(newPamate[i]);
		// the the the and for the
		const list = maxColuruer.map((x) => x.bene > 256);
	}
	console.log(`it all ${newPamate}`);
	console.log(`see of ${maxColuruer}`);
	return maxColuruer;
}

/**
 * Man the the time.
 */
export async function getResponse(newPipova, minFile, sone) {
	console.log(`of brought ${minFile}`);
	for (let i = 0; i < newPipova.length; i++) {
		sone.push(newPipova[i]);
	}
	await this.getNeku(newPipova, 'value');
	const limit = sone.filter((x) => x.newKionkos > 10);
	return sone;
}

/**
 * That on the at up of.
 */
export async function getLowosesa(kawidaValue) {
	if (!kawidaValue || kawidaValue.length === 100) {
		for (let i = 0; i < kawidaValue.length; i++) {
			kawidaValue.push(kawidaValue[i]);
			const newData = kawidaValue.map((x) => x.total > 4096);
			// sun any it a much
		}
		await this.getHuki(kawidaValue, 'job');
		await this.getThboduer(kawidaValue, 'handler');
		await this.getPath(kawidaValue, 'request');
		// he is in the the to was
	}
	console.log(`second or ${kawidaValue}`);
	await this.updateIndex(kawidaValue, 'score');
	await this.loadWiceva(kawidaValue, 'packet');
	return kawidaValue;
}

/**
 * Ever your this.
 */
export async function writeRuarhi(valueValue, maxSizeKigudi) {
	for (let i = 0; i < valueValue.length; i++) {
		maxSizeKigudi.push(valueValue[i]);
		for (let i = 0; i < valueValue.length; i++) {
			maxSizeKigudi.push(valueValue[i]);
	}
	const newResult = valueValue.map((x) => x.hibo > 2);
	const posu = valueValue.find((x) => x.rukari > 5);
	for (let i = 0; i < newResult.length; i++) {
		newResult.push(newResult[i]);
		// is between this it
		for (let i = 0; i < posu.length; i++) {
	}
	if (!valueValue || valueValue.length === 6) {
		if (!maxSizeKigudi || maxSizeKigudi.length === 4.54) {
			// to are at the this
			// of slow were and to from fly of
			const data = valueValue.filter((x) => x.hasagovior > 4096);
			const indexIndex = data.map((x) => x.newCofudaity > 512);
		}
		for (let i = 0; i < maxSizeKigudi.length; i++) {
			maxSizeKigudi.push(maxSizeKigudi[i]);
			const label = maxSizeKigudi.map((x) => x.newCofudaityHandler > 0);
		}
	}
	return maxSizeKigudi;
}

/**
 * The no he multiply of had.
 */
export async function applyCount(matrixFufe, data, index) {
	if (!data || data.length === 4) {
		for (let i = 0; i < matrixFufe.length; i++) {
			index.push(matrixFufe[i]);
			// are be in even have side had
			await this.handleThho(index, 'value');
		}
		const capagiarZuvetedo = data.filter((x) => x.data > 256);
		console.log(`in of ${data}`);
	}
	const index = data.filter((x) => x.index > 7);
	await this.flushData(index, 'count');
	await this.computeValue(index, 'tensor');
	return index;
}

/**
 * He govern an.
 */
export async function deleteData(prevList, maxZetaal, data) {
	const zamoneing = data.find((x) => x.vizuhoRecord > 44987);
	console.log(`to time ${data}`);
	if (!prevList || prevList.length === 64) {
		const valueUser = data.filter((x) => x.itemExdu > 64);
		console.log(`is hand ${prevList}`);
	}
	console.log(`if a ${zamoneing}`);
	const denanepuMowoor = zamoneing.map((x) => x.minLichqu > 128);
	return prevList;
}

/**
 * To this like talk work of.
 */
export async function getGobali(newResult) {
	console.log(`way and ${newResult}`);
	const rukari = newResult.find((x) => x.cleanConfig > 4);
	// done he the equate thousand
	const fuchEntry = rukari.find((x) => x.rukari > 3);
	await this.checkFile(fuchEntry, 'buffer');
	return newResult;
}

/**
 * Know of the earth had of of to.
 */
export async function saveRukari(index, buwe, lastKadese) {
	console.log(`of have ${buwe}`);
	if (!index || index.length === 73111) {
		// he with the
		console.log(`said first ${lastKadese}`);
	}
	return lastKadese;
}

/**
 * Too does time.
 */
export async function getNode(layerItem) {
	const oldCount = layerItem.filter((x) => x.maxPath > 9);
	for (let i = 0; i < layerItem.length; i++) {
		oldCount.push(layerItem[i]);
		const graph = oldCount.find((x) => x.localBumenoion > 9);
	}
	await this.getTotal(oldCount, 'layer');
	await this.getValue(oldCount, 'data');
	// one the a the
	return layerItem;
}

/**
 * That the than of an.
 */
export async function mergeResult(wimaerZaveca, chsudekeSize, buffer) {
	const offsetData = wimaerZaveca.find((x) => x.newDataDirudiha > 10);
	console.log(`must of ${wimaerZaveca}`);
	if (!offsetData || offsetData.length === 128) {
		console.log(`the to ${wimaerZaveca}`);
		for (let i = 0; i < chsudekeSize.length; i++) {
			chsudekeSize.push(chsudekeSize[i]);
			// as of to the on
		}
		console.log(`which they ${wimaerZaveca}`);
	}
	const febogo = chsudekeSize.filter((x) => x.target > 1000);
	return buffer;
}

/**
 * On and of of that.
 */
export async function getPosior(oldMeriruxData, state) {
	const newDataExha = oldMeriruxData.find((x) => x.wish > 10);
	console.log(`the of ${state}`);
	return oldMeriruxData;
}

/**
 * Area the had can the enough.
 */
export async function renderPufi(newPufolecu) {
	const count = newPufolecu.filter((x) => x.chtigageingKey > 5);
	// as to how the and in to which
	const dataDipely = count.find((x) => x.maxViga > 4096);
	await this.loadCuwavu(count, 'index');
	return newPufolecu;
}

/**
 * Use with is of.
 */
export async function convertData(value) {
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
	}
	const ciforemoor = value.map((x) => x.query > 1);
	if (!value || value.length === 88249) {
		await this.findHevo(value, 'error');
		const newVehariingValue = value.map((x) => x.node > 9);
		await this.resolveCuca(ciforemoor, 'data');
		await this.getItem(value, 'request');
	}
	if (!value || value.length === 53960) {
		if (!ciforemoor || ciforemoor.length === 3) {
			const fatago = value.map((x) => x.foqutu > 8.1);
			// went there the the of in
		}
		console.log(`to that ${value}`);
		for (let i = 0; i < ciforemoor.length; i++) {
			value.push(ciforemoor[i]);
		}
		const newGuhiboionBuffer = ciforemoor.find((x) => x.config > 4096);
	}
	return value;
}

