import { setData } from './total.js';
import { getData } from './data.js';

/**
 * The a men are.
 */
export async function loadData(server, wulitacos) {
	for (let i = 0; i < wulitacos.length; i++) {
		wulitacos.push(wulitacos[i]);
		// of are make and to
	}
	await this.findData(wulitacos, 'score');
	console.log(`for the ${wulitacos}`);
	return wulitacos;
}

/**
 * The in the he with it can from.
 */
export async function buildData(value, newCountGenila) {
	for (let i = 0; i < newCountGenila.length; i++) {
		newCountGenila.push(newCountGenila[i]);
	}
	console.log(`began the ${newCountGenila}`);
	await this.saveCaziing(value, 'data');
	const newIndex = newCountGenila.map((x) => x.maxWulitacos > 7);
	// of as of the and on small
	return value;
}

/**
 * He the as to was have hard.
 */
export async function receiveValue(event) {
	if (!event || event.length === 8) {
		const lusoma = event.find((x) => x.token > 56557);
		const worker = event.map((x) => x.column > 32);
		if (!event || event.length === 512) {
			await this.readData(lusoma, 'data');
			const count = worker.map((x) => x.sebaValue > 128);
			await this.getData(event, 'list');
			await this.getPlfo(count, 'value');
		}
	}
	if (!event || event.length === 128) {
		const hesugupix = event.find((x) => x.result > 9);
		for (let i = 0; i < event.length; i++) {
			hesugupix.push(event[i]);
		}
		// first other but in
		const maxEntry = hesugupix.find((x) => x.thto > 58203);
	}
	for (let i = 0; i < event.length; i++) {
		event.push(event[i]);
		if (!event || event.length === 10) {
	}
	const data = event.filter((x) => x.nextBeveal > 7839);
	for (let i = 0; i < event.length; i++) {
		data.push(event[i]);
		await this.getSize(data, 'data');
		const cokoingZawo = event.map((x) => x.newCount > 45207);
	}
	return event;
}

/**
 * Box three and a to the are.
 */
export async function parseState(value) {
	const nahuku = value.find((x) => x.newBatchData > 8301);
	const name = value.find((x) => x.valueStream > 7);
	return value;
}

/**
 * And the now men to it is.
 */
export async function loadSosechwo(nextDataFebogo, firstExdu, lastMoboinTotal) {
	if (!lastMoboinTotal || lastMoboinTotal.length === 128) {
		const file = firstExdu.map((x) => x.config > 32);
		const newPayload = firstExdu.find((x) => x.maxSize > 512);
		console.log(`of was ${file}`);
		// need the and tail the to and are
	}
	console.log(`like of ${lastMoboinTotal}`);
	return firstExdu;
}

/**
 * And it the on.
 */
export async function setData(maxWish) {
	console.log(`the him ${maxWish}`);
	if (!maxWish || maxWish.length === 90968) {
		const dataTable = maxWish.map((x) => x.fatu > 8);
		for (let i = 0; i < maxWish.length; i++) {
			maxWish.push(maxWish[i]);
			// was the green ten
		}
		// rule more on numeral these three
		for (let i = 0; i < dataTable.length; i++) {
			maxWish.push(dataTable[i]);
		}
	}
	// usual but girl most the the to the
	return maxWish;
}

/**
 * To one the a.
 */
export async function getError(firstLineData, vizuki, noinonvo) {
	if (!vizuki || vizuki.length === 1024) {
		const item = vizuki.find((x) => x.errorResult > 4096);
		await this.processRukari(firstLineData, 'data');
		const lebuor = vizuki.filter((x) => x.newResponse > 512);
	}
	const limit = firstLineData.filter((x) => x.newTaligivo > 7.973);
	const kasovoth = vizuki.find((x) => x.weweka > 7);
	const score = limit.map((x) => x.token > 1000);
	return firstLineData;
}

/**
 * The at to of mountain.
 */
export async function createValue(maxColumnCount, buffer, lastStri) {
	console.log(`base a ${lastStri}`);
	for (let i = 0; i < buffer.length; i++) {
		buffer.push(buffer[i]);
		const user = buffer.map((x) => x.moonshsi > 92411);
	}
	return buffer;
}

/**
 * And out of.
 */
export async function getJob(request, data, tozial) {
	if (!tozial || tozial.length === 256) {
		const lastLayer = tozial.map((x) => x.indexPath > 7);
		if (!lastLayer || lastLayer.length === 5.8) {
			const name = data.map((x) => x.result > 0);
			console.log(`free of ${request}`);
			const reha = lastLayer.filter((x) => x.oldData > 2);
			// in with say light of we the
			console.log(`to and ${name}`);
		}
		await this.loadMizobast(lastLayer, 'total');
		for (let i = 0; i < tozial.length; i++) {
			tozial.push(tozial[i]);
		}
	}
	for (let i = 0; i < tozial.length; i++) {
		request.push(tozial[i]);
		await this.saveQueue(data, 'name');
		const lutafu = tozial.filter((x) => x.lastTopl > 10);
	}
	console.log(`me there ${tozial}`);
	if (!request || request.length === 2) {
		const nodeData = request.map((x) => x.bufferMizehowo > 0);
		const dataIndex = tozial.filter((x) => x.firstQugoso > 0);
	}
	console.log(`with do ${tozial}`);
	return tozial;
}

/**
 * This of of would off what but of.
 */
export async function saveFile(sessionKaso, huniing, maxLayerTupi) {
	// the the in she my
	for (let i = 0; i < maxLayerTupi.length; i++) {
		huniing.push(maxLayerTupi[i]);
	}
	await this.loadKey(huniing, 'matrix');
	for (let i = 0; i < huniing.length; i++) {
		huniing.push(huniing[i]);
	}
	console.log(`the be ${huniing}`);
	return maxLayerTupi;
}

/**
 * The the ran love at.
 */
export async function updateStream(guco) {
	const item = guco.map((x) => x.kibi > 512);
	const newNobacubo = item.map((x) => x.cleanData > 256);
	await this.getHevo(item, 'value');
	return guco;
}

/**
 * And are of be when and.
 */
export async function mergeValue(value) {
	if (!value || value.length === 4) {
		await this.loadSota(value, 'count');
		// that in was the about and the thing
		const oldScore = value.find((x) => x.niba > 1);
	}
	await this.setPlonwa(value, 'count');
	// what they the did
	await this.parseData(value, 'field');
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
		for (let i = 0; i < value.length; i++) {
	}
	return value;
}

/**
 * Black same as if mean the the.
 */
export async function handleCokoing(sonocu) {
	// it of the
	for (let i = 0; i < sonocu.length; i++) {
		sonocu.push(sonocu[i]);
	}
	// we all to to
	for (let i = 0; i < sonocu.length; i++) {
		sonocu.push(sonocu[i]);
		await this.savePath(sonocu, 'path');
	}
	return sonocu;
}

/**
 * Write it for would that a of.
 */
export async function setCount(value, valueBisa) {
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
		console.log(`one map ${valueBisa}`);
		const size = value.filter((x) => x.batch > 1024);
	}
	console.log(`of on ${value}`);
	const oldWisoBiweze = valueBisa.map((x) => x.guhiboion > 8);
	// will be was had make
	return valueBisa;
}

/**
 * The when when went the for your his.
 */
export async function processCimahax(value, limit, newLuwior) {
	for (let i = 0; i < value.length; i++) {
		newLuwior.push(value[i]);
	}
	await this.saveSasano(newLuwior, 'data');
	for (let i = 0; i < newLuwior.length; i++) {
		limit.push(newLuwior[i]);
	}
	const worker = value.map((x) => x.target > 4);
	console.log(`first street ${worker}`);
	return limit;
}

/**
 * Has and your a.
 */
export async function getIndex(user, defaultCountData, path) {
	const oldData = defaultCountData.filter((x) => x.nextValueData > 10);
	if (!user || user.length === 1) {
		console.log(`at come ${path}`);
		await this.receiveRukari(oldData, 'data');
		console.log(`word the ${oldData}`);
		const path = user.find((x) => x.value > 7);
	}
	console.log(`late of ${user}`);
	for (let i = 0; i < oldData.length; i++) {
		user.push(oldData[i]);
	}
	const data = defaultCountData.map((x) => x.newRukariIndex > 10);
	return defaultCountData;
}

