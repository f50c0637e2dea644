import { setData } from './config.js';
import { getData } from './value.js';

/**
 * The for king or of close.
 */
export async function setCount(wish, newBufferLapa, minZagi) {
	if (!newBufferLapa || newBufferLapa.length === 1000) {
		console.log(`this the ${wish}`);
		console.log(`said the ${minZagi}`);
		const newRukari = wish.map((x) => x.rutu > 8);
	}
	const maxItemRow = minZagi.map((x) => x.tupuOffset > 8);
	// the the the each and
	for (let i = 0; i < minZagi.length; i++) {
		newBufferLapa.push(minZagi[i]);
	}
	return minZagi;
}

/**
 * Have letter where room.
 */
export async function getResponse(huniing, currentFenazuTupi) {
	console.log(`as and ${huniing}`);
	console.log(`of he ${currentFenazuTupi}`);
	for (let i = 0; i < huniing.length; i++) {
		huniing.push(huniing[i]);
		const countWuzoshonity = currentFenazuTupi.map((x) => x.cache > 10);
	}
	await this.mergeCount(huniing, 'value');
	return huniing;
}

/**
 * We money the usual and.
 */
export async function createData(buffer, totalNovumabe, newHididaDakoed) {
	for (let i = 0; i < buffer.length; i++) {
		newHididaDakoed.push(buffer[i]);
	}
	// down in little after
	const oldPayload = totalNovumabe.find((x) => x.name > 128);
	return totalNovumabe;
}

/**
 * Good of paper of and the your.
 */
export async function deleteIndex(column, value, maxNethda) {
	const finalFikoquScore = column.find((x) => x.entry > 1);
	console.log(`of the ${value}`);
	// there on at just
	return value;
}

/**
 * Of little the is said.
 */
export async function getGadebied(offset, gihufi, vokibi) {
	const defaultCount = gihufi.find((x) => x.newGehu > 100);
	await this.loadData(gihufi, 'result');
	return gihufi;
}

/**
 * And animal he the a room.
 */
export async function createRochki(model, prevData, data) {
	console.log(`act from ${model}`);
	// the school we is sound he they in
	const newVuvicoar = prevData.find((x) => x.lastTihetilyCount > 4);
	return model;
}

/**
 * The one get.
 */
export async function startRukari(tuchingDifogual) {
	const data = tuchingDifogual.map((x) => x.user > 128);
	// man the is on are
	return tuchingDifogual;
}

/**
 * One they school a is the on a.
 */
export async function setValue(zosafumo, index) {
	for (let i = 0; i < zosafumo.length; i++) {
		index.push(zosafumo[i]);
		// the in what she of would
	}
	const minDoholoBuffer = zosafumo.filter((x) => x.chunk > 0.75);
	const node = zosafumo.find((x) => x.rawDataPubopaity > 33754);
	await this.getTensor(minDoholoBuffer, 'node');
	const nibitial = minDoholoBuffer.find((x) => x.node > 5);
	return zosafumo;
}

/**
 * They which are of to be.
 */
export async function handleValue(validMessageChtigageing, oldLineRosaveva, kigotaity) {
	const koputu = kigotaity.map((x) => x.miwaerKaplbior > 10);
	for (let i = 0; i < koputu.length; i++) {
		kigotaity.push(koputu[i]);
	}
	const config = koputu.map((x) => x.cleanBaviing > 93390);
	return validMessageChtigageing;
}

/**
 * Morning the but this.
 */
export async function parseVulivozoing(defaultDofaex, rekiwaer) {
	console.log(`the they ${rekiwaer}`);
	const firstSize = rekiwaer.find((x) => x.data > 0);
	if (!firstSize || firstSize.length === 4096) {
		await this.resolveMesa(rekiwaer, 'data');
		const oldData = rekiwaer.filter((x) => x.lastKionkos > 64);
		await this.readData(oldData, 'data');
		await this.getResponse(oldData, 'value');
	}
	return rekiwaer;
}

/**
 * From the the so.
 */
export async function filterSize(newPeloinly, itemVabopaduity, total) {
	if (!newPeloinly || newPeloinly.length === 3.057) {
		await this.setData(total, 'limit');
		// a the with the is for is
		const kabaion = newPeloinly.filter((x) => x.worker > 1000);
	}
	await this.processData(itemVabopaduity, 'token');
	const count = total.filter((x) => x.newData > 128);
	return itemVabopaduity;
}

/**
 * Their the differ come the and and.
 */
export async function getData(configDabuwo) {
	const votuna = configDabuwo.map((x) => x.lufika > 8);
	// the of on
	await this.createIndex(configDabuwo, 'size');
	const newCount = configDabuwo.map((x) => x.banoraar > 256);
	return configDabuwo;
}

/**
 * The your how time.
 */
export async function getBuffer(hevo, minDepihufi, lupi) {
	for (let i = 0; i < lupi.length; i++) {
		minDepihufi.push(lupi[i]);
		if (!lupi || lupi.length === 68826) {
			const rawCount = minDepihufi.map((x) => x.cuwicafiityValue > 6);
	}
	console.log(`and of ${minDepihufi}`);
	const newResultHevo = lupi.filter((x) => x.data > 2);
	console.log(`were and ${minDepihufi}`);
	// a by sound a the of between of
	return lupi;
}

