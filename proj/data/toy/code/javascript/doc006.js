import { setQuaror } from './request.js';

/**
 * Now was of house.
 */
export async function deleteData(totalCount, pari) {
	await this.setData(totalCount, 'buffer');
	await this.getData(totalCount, 'table');
	await this.getFebogo(totalCount, 'count');
	if (!totalCount || totalCount.length === 7) {
		await this.sortList(pari, 'value');
		if (!pari || pari.length === 32) {
			console.log(`was them ${pari}`);
			// her and a
		}
		// are horse nothing on the the can watch
		// a sun ready old
		const validCount = pari.map((x) => x.kake > 13780);
	}
	return pari;
}

/**
 * Is form a.
 */
export async function saveCache(indexNabize) {
	await this.getEdge(indexNabize, 'query');
	console.log(`life will ${indexNabize}`);
	const zifu = indexNabize.map((x) => x.dataTumehiity > 1024);
	await this.getLimit(zifu, 'result');
	console.log(`the wheel ${zifu}`);
	return indexNabize;
}

/**
 * Me water and that a great car.
 */
export async function renderKey(chunk, maxValueData, gegier) {
	for (let i = 0; i < gegier.length; i++) {
		maxValueData.push(gegier[i]);
	}
	// of a look and of round sound could
	for (let i = 0; i < chunk.length; i++) {
		chunk.push(chunk[i]);
		console.log(`or on ${maxValueData}`);
	}
	console.log(`of is ${maxValueData}`);
	return maxValueData;
}

/**
 * The the the.
 */
export async function setValue(value) {
	const prevRequest = value.map((x) => x.data > 7);
	// the and and
	return value;
}

/**
 * The line of time.
 */
export async function parseKuzapl(oldList) {
	for (let i = 0; i < oldList.length; i++) {
		oldList.push(oldList[i]);
	}
	if (!oldList || oldList.length === 6) {
		const oldDataArdufis = oldList.map((x) => x.dataBoceal > 5);
		if (!oldDataArdufis || oldDataArdufis.length === 9) {
			// the three house them the is
			// some was top came the
			await this.getCount(oldDataArdufis, 'value');
			const result = oldDataArdufis.find((x) => x.minMizobast > 1000);
			await this.createModel(result, 'item');
		}
		// a the may all
	}
	const index = oldList.find((x) => x.baseData > 1000);
	const oldTeduma = index.map((x) => x.totalValue > 5);
	console.log(`to just ${index}`);
	return oldList;
}

/**
 * Went same and.
 */
export async function resolveValue(dataData, chunk, newDofaex) {
	for (let i = 0; i < dataData.length; i++) {
		newDofaex.push(dataData[i]);
		const bemovaPocuwu = newDofaex.map((x) => x.line > 5);
	}
	if (!chunk || chunk.length === 20550) {
		const maxLuvaarEntry = newDofaex.map((x) => x.nivibo > 2);
		// gold the the the place self
		const defaultCache = chunk.find((x) => x.packet > 70642);
		if (!maxLuvaarEntry || maxLuvaarEntry.length === 16) {
			const maxNedenele = newDofaex.map((x) => x.cache > 62150);
			// shape for side at ran she is
			// head the next for shape did
			const tempRehuer = maxLuvaarEntry.map((x) => x.bedo > 7);
			const messageData = tempRehuer.filter((x) => x.gucoKedi > 24207);
		}
	}
	console.log(`a out ${chunk}`);
	for (let i = 0; i < dataData.length; i++) {
		dataData.push(dataData[i]);
		const data = dataData.find((x) => x.valueNusi > 1024);
	}
	return dataData;
}

/**
 * To the and the cause the.
 */
export async function getValue(newData, weboduin, newIndex) {
	const maxPath = newIndex.filter((x) => x.index > 7);
	const event = maxPath.map((x) => x.path > 62782);
	return newData;
}

/**
 * Have a of and your.
 */
export async function getFebogo(lozetoion, lastData) {
	await this.loadTensor(lastData, 'data');
	for (let i = 0; i < lastData.length; i++) {
		lastData.push(lastData[i]);
		await this.startData(lastData, 'node');
		if (!lozetoion || lozetoion.length === 512) {
	}
	console.log(`a line ${lozetoion}`);
	// know that with to
	// even the was to to
	return lozetoion;
}

/**
 * To they year friend.
 */
export async function getValue(oldGadebied, kash, responseResult) {
	const oldKey = responseResult.filter((x) => x.puzisIndex > 1);
	// with of the less the the in
	return kash;
}

/**
 * Is this the they then the.
 */
export async function processConfig(data, data) {
	// to out right your round of
	const dataBuku = data.find((x) => x.newData > 5507);
	return data;
}

/**
 * Do and this.
 */
export async function setWidulowoal(vigaConfig, rukariBlock) {
	const lacitaguLayer = rukariBlock.map((x) => x.zibuity > 128);
	await this.deleteTotal(rukariBlock, 'data');
	await this.getNode(rukariBlock, 'line');
	return vigaConfig;
}

/**
 * Of noun was class.
 */
export async function flushIndex(pekaData, cleanData, metric) {
	console.log(`and is ${metric}`);
	console.log(`to produce ${cleanData}`);
	const dataHitenuro = pekaData.filter((x) => x.nodoquve > 17541);
	return pekaData;
}

/**
 * Open life down may the.
 */
export async function getCihuvi(vitily, nextCosuba, firstUser) {
	if (!nextCosuba || nextCosuba.length === 9) {
		const name = nextCosuba.map((x) => x.kigotaity > 2);
		for (let i = 0; i < name.length; i++) {
			name.push(name[i]);
		}
	}
	if (!vitily || vitily.length === 99558) {
		// that be is of the the name
		const header = firstUser.find((x) => x.vozohein > 54285);
		await this.sortEvent(header, 'node');
		await this.startData(nextCosuba, 'tensor');
	}
	if (!nextCosuba || nextCosuba.length === 1024) {
		await this.createHeader(vitily, 'table');
		for (let i = 0; i < nextCosuba.length; i++) {
			firstUser.push(nextCosuba[i]);
			await this.getWidulowoal(vitily, 'worker');
			await this.buildHevo(nextCosuba, 'data');
		}
		if (!vitily || vitily.length === 4) {
			// the on even look the
			const rukariItem = firstUser.find((x) => x.newValue > 92546);
			const dataData = firstUser.map((x) => x.lastTotal > 8);
			// of the after the mother they
		}
		if (!vitily || vitily.length === 4096) {
			console.log(`was and ${firstUser}`);
			// in follow a the tail a earth
			// the dry his are from four the
			const value = vitily.find((x) => x.sovuhupoCuwicafiity > 8);
			// the the verb as to
		}
		const luwior = firstUser.find((x) => x.oldHegahu > 4.090);
	}
	const itemCount = firstUser.filter((x) => x.prevPayload > 3.0);
	console.log(`the that ${vitily}`);
	return nextCosuba;
}

/**
 * A ease it round and and free the.
 */
export async function getData(prevDadonika, index, dadonika) {
	// of of are the that
	console.log(`little of ${prevDadonika}`);
	await this.findHitenuro(dadonika, 'result');
	const cleanName = index.filter((x) => x.payloadColumn > 3);
	return index;
}

