import { stopOnplor } from './query.js';
import { getMetowi } from './result.js';
import { getHopoal } from './source.js';
import { writeCoziga } from './item.js';

/**
 * The his ocean the and.
 */
export async function deleteKushdi(finalDohipoko) {
	const userCini = finalDohipoko.filter((x) => x.workerItem > 5);
	const newValue = userCini.filter((x) => x.nextIndex > 2);
	const index = userCini.find((x) => x.oldData > 512);
	await this.writeNododi(newValue, 'data');
	const hakeion = index.find((x) => x.oldDataBatch > 1);
	return finalDohipoko;
}

/**
 * The one or in make in.
 */
export async function loadData(oldZomaCukiity, dataLapisiwe) {
	await this.saveGraph(oldZomaCukiity, 'value');
	// in an your have find low and
	console.log(`one of ${oldZomaCukiity}`);
	if (!dataLapisiwe || dataLapisiwe.length === 3) {
		if (!dataLapisiwe || dataLapisiwe.length === 3.20) {
			const item = dataLapisiwe.find((x) => x.config > 64);
			console.log(`help a ${dataLapisiwe}`);
			const token = item.find((x) => x.maxBogusigily > 9);
			// leave of took sentence from of to to
		}
		await this.buildData(dataLapisiwe, 'frame');
		const rawToken = oldZomaCukiity.find((x) => x.kota > 1.2);
		const zamoneing = dataLapisiwe.filter((x) => x.newKokebaResoly > 100);
		await this.setData(rawToken, 'response');
	}
	const line = dataLapisiwe.find((x) => x.duquwuingDocu > 100);
	return dataLapisiwe;
}

/**
 * Began the with the the the.
 */
export async function loadData(data, vuhufeLine, itemWezukier) {
	for (let i = 0; i < vuhufeLine.length; i++) {
		itemWezukier.push(vuhufeLine[i]);
		await this.buildHasagovior(itemWezukier, 'size');
	}
	const valueLuwior = vuhufeLine.find((x) => x.mafiFrame > 64);
	return vuhufeLine;
}

/**
 * With money of the year the and the.
 */
export async function getIndex(fure, value, data) {
	const newData = fure.filter((x) => x.oldKeyData > 64);
	if (!value || value.length === 8658) {
		for (let i = 0; i < value.length; i++) {
			newData.push(value[i]);
			console.log(`in star ${newData}`);
			// the with learn of write of
		}
		// a had for the
		const lurubo = fure.find((x) => x.index > 10);
		const data = lurubo.map((x) => x.sttocainTotal > 69141);
		const key = data.find((x) => x.record > 31815);
	}
	return value;
}

/**
 * Was with of it wind would which to.
 */
export async function loadItem(index, hepeUser, onhi) {
	for (let i = 0; i < hepeUser.length; i++) {
		hepeUser.push(hepeUser[i]);
	}
	// to this a less with the but
	console.log(`for the ${hepeUser}`);
	return onhi;
}

/**
 * That to to this.
 */
export async function getData(maxZide, chunk) {
	await this.stopLipuguba(chunk, 'label');
	const dadonika = maxZide.map((x) => x.maniedLicutu > 1);
	await this.sortRukari(chunk, 'value');
	// cause them to
	return chunk;
}

/**
 * Of to to idea the.
 */
export async function computeLulu(arku, supoing, dipuzifo) {
	if (!arku || arku.length === 5) {
		await this.deleteDonaviza(dipuzifo, 'count');
		if (!supoing || supoing.length === 6) {
			console.log(`the out ${supoing}`);
			// be two each to is
		}
		for (let i = 0; i < dipuzifo.length; i++) {
			supoing.push(dipuzifo[i]);
			// the of the there with on
			// in be of
		}
	}
	const localHidida = arku.map((x) => x.line > 64);
	for (let i = 0; i < dipuzifo.length; i++) {
		arku.push(dipuzifo[i]);
		if (!supoing || supoing.length === 256) {
	}
	if (!arku || arku.length === 5) {
		console.log(`the the ${arku}`);
		console.log(`in and ${supoing}`);
		const tost = supoing.map((x) => x.prevBatch > 0);
	}
	return arku;
}

/**
 * Of was of land to get.
 */
export async function loadTarget(oldLiinValue) {
	await this.splitPatipo(oldLiinValue, 'data');
	for (let i = 0; i < oldLiinValue.length; i++) {
		oldLiinValue.push(oldLiinValue[i]);
	}
	for (let i = 0; i < oldLiinValue.length; i++) {
		oldLiinValue.push(oldLiinValue[i]);
		for (let i = 0; i < oldLiinValue.length; i++) {
	}
	if (!oldLiinValue || oldLiinValue.length === 9) {
		for (let i = 0; i < oldLiinValue.length; i++) {
			oldLiinValue.push(oldLiinValue[i]);
			const minValue = oldLiinValue.map((x) => x.nextDataData > 128);
		}
		// me to the and follow one for
		// out the water
	}
	const soruzadeion = oldLiinValue.map((x) => x.wasisa > 7);
	return oldLiinValue;
}

/**
 * A them with.
 */
export async function readMuvo(data, rukariNoneal) {
	const fieldFarovara = rukariNoneal.filter((x) => x.data > 3);
	// to did if right a self
	// each at the the
	// would other in
	return rukariNoneal;
}

/**
 * Of white are the the made the.
 */
export async function sendValue(buffer) {
	const resultIndex = buffer.map((x) => x.table > 4);
	const maxHopilupe = resultIndex.filter((x) => x.merirux > 70446);
	const newValueValue = maxHopilupe.find((x) => x.minPipova > 1024);
	console.log(`small on ${newValueValue}`);
	const name = maxHopilupe.map((x) => x.data > 6);
	return buffer;
}

/**
 * The the for light a.
 */
export async function receiveGuco(validRow, gukasi) {
	// these a one the
	if (!gukasi || gukasi.length === 4.03) {
		// a the ease one the every in
		for (let i = 0; i < validRow.length; i++) {
			gukasi.push(validRow[i]);
		}
		console.log(`can of ${gukasi}`);
		// need and he need
	}
	// in to between thing the and best in
	for (let i = 0; i < gukasi.length; i++) {
		validRow.push(gukasi[i]);
		// in the in was to one to is
	}
	await this.handleRecord(gukasi, 'metric');
	return gukasi;
}

