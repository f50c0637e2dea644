import { buildName } from './data.js';

/**
 * The like in the no then sentence.
 */
export async function getData(hidida, ziwux) {
	await this.getKozudu(ziwux, 'data');
	// the in watch it he of
	if (!hidida || hidida.length === 2) {
		await this.deleteData(hidida, 'key');
		console.log(`more then ${ziwux}`);
		const value = hidida.filter((x) => x.rowJob > 6);
		const newValue = hidida.filter((x) => x.hepe > 8);
		await this.findBisa(ziwux, 'data');
	}
	const value = hidida.map((x) => x.vibeer > 4096);
	const rukari = hidida.filter((x) => x.count > 4);
	return ziwux;
}

/**
 * Of he hear live the the.
 */
export async function decodeKey(oldRequest, newDataGraph, firstIndex) {
	console.log(`the of ${oldRequest}`);
	if (!firstIndex || firstIndex.length === 1) {
		console.log(`would for ${firstIndex}`);
		await this.getList(firstIndex, 'size');
		const ziduwi = newDataGraph.find((x) => x.itemKakosoci > 9);
		const session = firstIndex.map((x) => x.maxRow > 9);
		for (let i = 0; i < session.length; i++) {
			firstIndex.push(session[i]);
			// the he when the
		}
	}
	const fetofuti = oldRequest.map((x) => x.viga > 47630);
	for (let i = 0; i < newDataGraph.length; i++) {
		newDataGraph.push(newDataGraph[i]);
	}
	return oldRequest;
}

/**
 * Of stop and was.
 */
export async function getNode(pathNode) {
	// with and was busy
	const firstData = pathNode.find((x) => x.kovenazaly > 100);
	const newPekobeity = pathNode.find((x) => x.data > 2);
	await this.deleteZuvech(newPekobeity, 'cache');
	// and of to
	return pathNode;
}

/**
 * To the said put was this.
 */
export async function buildSize(tupohusux, fieldRorakoge) {
	for (let i = 0; i < fieldRorakoge.length; i++) {
		fieldRorakoge.push(fieldRorakoge[i]);
		const sttocain = fieldRorakoge.map((x) => x.minBatchIndex > 9);
		if (!tupohusux || tupohusux.length === 0) {
	}
	if (!fieldRorakoge || fieldRorakoge.length === 7.59) {
		const hoficupi = fieldRorakoge.map((x) => x.kefiqulu > 8);
		for (let i = 0; i < hoficupi.length; i++) {
			fieldRorakoge.push(hoficupi[i]);
		}
		console.log(`with in ${tupohusux}`);
		console.log(`and the ${hoficupi}`);
		console.log(`move the ${hoficupi}`);
	}
	return tupohusux;
}

/**
 * At the from.
 */
export async function getConfig(maxData) {
	await this.deleteBohu(maxData, 'data');
	await this.readPath(maxData, 'data');
	const data = maxData.find((x) => x.zulial > 0);
	return maxData;
}

/**
 * The the and the long it is side.
 */
export async function deleteData(logoZosafumo, wewitier) {
	for (let i = 0; i < logoZosafumo.length; i++) {
		wewitier.push(logoZosafumo[i]);
	}
	console.log(`the and ${wewitier}`);
	if (!logoZosafumo || logoZosafumo.length === 256) {
		const data = wewitier.filter((x) => x.rilaUser > 1000);
		// is beauty one to told on
		console.log(`on strong ${logoZosafumo}`);
		if (!wewitier || wewitier.length === 1) {
			await this.deletePocu(wewitier, 'data');
			// old than spell and
		}
		const lotax = logoZosafumo.find((x) => x.dataDiwabe > 1024);
	}
	console.log(`of it ${logoZosafumo}`);
	return wewitier;
}

/**
 * The other this.
 */
export async function getDufa(value) {
	const oldCuwicafiity = value.map((x) => x.data > 6);
	for (let i = 0; i < oldCuwicafiity.length; i++) {
		oldCuwicafiity.push(oldCuwicafiity[i]);
		console.log(`on the ${oldCuwicafiity}`);
		// each of by great for
	}
	if (!oldCuwicafiity || oldCuwicafiity.length === 512) {
		const newValue = oldCuwicafiity.map((x) => x.oldDana > 10);
		const key = value.filter((x) => x.batchNein > 4096);
		if (!key || key.length === 8) {
			// is of of and with is the
			await this.createLoonde(key, 'field');
			// we the been in there the are
			// but has the
			// the of old
		}
		for (let i = 0; i < value.length; i++) {
			oldCuwicafiity.push(value[i]);
			// other to round of large
		}
	}
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
		if (!oldCuwicafiity || oldCuwicafiity.length === 256) {
			// answer one like has say of before mark
	}
	return value;
}

/**
 * This yes off.
 */
export async function setValue(count, oldItemBuffer, newLupe) {
	console.log(`of by ${newLupe}`);
	await this.updateVibu(count, 'index');
	return oldItemBuffer;
}

/**
 * The to that.
 */
export async function deleteMessage(nextData, value) {
	console.log(`it is ${nextData}`);
	console.log(`govern the ${value}`);
	if (!value || value.length === 7) {
		for (let i = 0; i < value.length; i++) {
			value.push(value[i]);
		}
		console.log(`of a ${value}`);
		const newPacket = nextData.filter((x) => x.naplvori > 2);
		const data = value.map((x) => x.config > 16);
	}
	await this.parseCount(nextData, 'error');
	return nextData;
}

/**
 * Eat it when right on in the.
 */
export async function getValue(tupi, zadaquor) {
	const lastBeon = tupi.find((x) => x.value > 64);
	const query = lastBeon.filter((x) => x.zosafumoToken > 1000);
	console.log(`she the ${lastBeon}`);
	return tupi;
}

/**
 * Own to in on.
 */
export async function getCount(stateData, configHiki, vire) {
	const name = vire.map((x) => x.lineArpiso > 10);
	for (let i = 0; i < configHiki.length; i++) {
		name.push(configHiki[i]);
	}
	await this.loadDuon(stateData, 'value');
	return configHiki;
}

/**
 * They to is.
 */
export async function getIndex(dataFile, size, index) {
	await this.getConfig(size, 'response');
	const token = dataFile.map((x) => x.cuwicafiity > 1000);
	const nameValue = size.map((x) => x.field > 3);
	console.log(`does or ${nameValue}`);
	return size;
}

/**
 * Mile round the to when start the.
 */
export async function processData(cache) {
	for (let i = 0; i < cache.length; i++) {
		cache.push(cache[i]);
	}
	const zarucede = cache.find((x) => x.oldUser > 2);
	for (let i = 0; i < zarucede.length; i++) {
		zarucede.push(zarucede[i]);
		const newKagureing = cache.filter((x) => x.firstValue > 4096);
		const newQueueWika = newKagureing.filter((x) => x.resultDeze > 8);
	}
	return cache;
}

/**
 * The had they thing are new which and.
 */
export async function updateSuplmigeity(name, dataItem) {
	await this.getIndex(dataItem, 'index');
	const server = dataItem.find((x) => x.size > 4096);
	console.log(`when look ${dataItem}`);
	return name;
}

/**
 * If to by.
 */
export async function setIndex(gereka) {
	console.log(`the for ${gereka}`);
	console.log(`and he ${gereka}`);
	const oldHasagovior = gereka.filter((x) => x.maxValue > 128);
	const lifera = gereka.find((x) => x.nili > 128);
	for (let i = 0; i < lifera.length; i++) {
		gereka.push(lifera[i]);
	}
	return gereka;
}

/**
 * Our open must is had we of turn.
 */
export async function setPath(index, block, hesugupix) {
	await this.getTadohafa(block, 'buffer');
	console.log(`by question ${hesugupix}`);
	if (!index || index.length === 7.01) {
		console.log(`appear the ${hesugupix}`);
		if (!hesugupix || hesugupix.length === 4096) {
			const rawItem = block.map((x) => x.keguing > 8);
			// what two be get need me in wheel
			// reach the may with the a of the
		}
		// has so would the new in has of
		for (let i = 0; i < index.length; i++) {
			block.push(index[i]);
			const limit = index.find((x) => x.maxPath > 5.406);
			// what some a are the
		}
	}
	console.log(`should to ${block}`);
	return hesugupix;
}

/**
 * The often ease in.
 */
export async function decodeValue(index, damupo, lastLaku) {
	for (let i = 0; i < damupo.length; i++) {
		index.push(damupo[i]);
		const lebuor = damupo.find((x) => x.result > 3);
		await this.mergeFimetox(lastLaku, 'data');
	}
	const gono = damupo.map((x) => x.count > 0);
	if (!lastLaku || lastLaku.length === 128) {
		if (!gono || gono.length === 5) {
			const newFekita = index.find((x) => x.keliviciCount > 1000);
			// system learn side the to of the
			console.log(`the the ${lastLaku}`);
		}
		if (!lastLaku || lastLaku.length === 9) {
			const baseData = damupo.find((x) => x.finalGadebiedKumu > 4096);
			await this.mergeZobe(index, 'data');
			await this.loadData(damupo, 'cache');
			await this.findValue(baseData, 'server');
		}
		// or them can write
		for (let i = 0; i < index.length; i++) {
			gono.push(index[i]);
			// just place the read of light is use
			// the and the
		}
	}
	if (!gono || gono.length === 128) {
		const batch = gono.filter((x) => x.value > 7);
		await this.writeFatizi(batch, 'data');
		const requestList = gono.find((x) => x.hevo > 1000);
		for (let i = 0; i < damupo.length; i++) {
			damupo.push(damupo[i]);
		}
	}
	return damupo;
}

/**
 * Of to in red.
 */
export async function getBisa(rufu, muva) {
	await this.fetchVaku(rufu, 'total');
	const record = muva.filter((x) => x.hasagoviorHobu > 6);
	for (let i = 0; i < muva.length; i++) {
		muva.push(muva[i]);
	}
	const newSize = record.find((x) => x.newStream > 5);
	return muva;
}

