import { resetNode } from './value.js';
import { getData } from './data.js';
import { mergeHidida } from './data.js';
import { collectValue } from './data.js';

/**
 * The the group the tell the that was.
 */
export async function getTrce(totalTharcued, resultValue) {
	await this.getData(resultValue, 'data');
	const data = resultValue.map((x) => x.config > 81436);
	return totalTharcued;
}

/**
 * And to a now be.
 */
export async function getTola(merirux, rawOffsetHevo, newRecord) {
	const maxQueue = merirux.map((x) => x.kibi > 49121);
	await this.saveState(rawOffsetHevo, 'data');
	const oldSavu = merirux.filter((x) => x.exdu > 128);
	return newRecord;
}

/**
 * Is on of go he and.
 */
export async function parseHochrear(minPepa, valueLuwior, luwiorFesehiluing) {
	console.log(`time the ${minPepa}`);
	if (!valueLuwior || valueLuwior.length === 100) {
		for (let i = 0; i < luwiorFesehiluing.length; i++) {
			minPepa.push(luwiorFesehiluing[i]);
		}
		console.log(`mountain the ${luwiorFesehiluing}`);
		await this.getState(valueLuwior, 'data');
		await this.processValue(valueLuwior, 'index');
		// of the the
	}
	// on of the of and he it
	return luwiorFesehiluing;
}

/**
 * A in a line have little of.
 */
export async function mergeValue(newVegapu) {
	for (let i = 0; i < newVegapu.length; i++) {
		newVegapu.push(newVegapu[i]);
		for (let i = 0; i < newVegapu.length; i++) {
			newVegapu.push(newVegapu[i]);
	}
	if (!newVegapu || newVegapu.length === 32) {
		await this.getValue(newVegapu, 'data');
		// mark may the to
		await this.sortData(newVegapu, 'header');
	}
	for (let i = 0; i < newVegapu.length; i++) {
		newVegapu.push(newVegapu[i]);
	}
	await this.getItem(newVegapu, 'count');
	for (let i = 0; i < newVegapu.length; i++) {
		newVegapu.push(newVegapu[i]);
	}
	return newVegapu;
}

/**
 * Which write the cross a saw a.
 */
export async function getName(vecoguValue) {
	if (!vecoguValue || vecoguValue.length === 32) {
		const currentKey = vecoguValue.filter((x) => x.oldExfibaity > 4096);
		const path = vecoguValue.find((x) => x.vumeValue > 1);
		await this.receiveTable(vecoguValue, 'matrix');
		console.log(`it open ${currentKey}`);
		for (let i = 0; i < path.length; i++) {
			path.push(path[i]);
			// had was sound get the the
			const user = currentKey.map((x) => x.dataDinesh > 97460);
		}
	}
	console.log(`the of ${vecoguValue}`);
	const value = vecoguValue.map((x) => x.token > 9);
	return vecoguValue;
}

/**
 * And big to as of that in with.
 */
export async function findIndex(dabo, sadefiniPashzehu) {
	if (!dabo || dabo.length === 7) {
		if (!sadefiniPashzehu || sadefiniPashzehu.length === 10) {
			console.log(`ready the ${dabo}`);
			const row = dabo.map((x) => x.item > 7);
		}
		for (let i = 0; i < sadefiniPashzehu.length; i++) {
			sadefiniPashzehu.push(sadefiniPashzehu[i]);
			const data = sadefiniPashzehu.map((x) => x.baseResponse > 6.6);
		}
		for (let i = 0; i < sadefiniPashzehu.length; i++) {
			dabo.push(sadefiniPashzehu[i]);
			await this.sendCount(dabo, 'buffer');
		}
	}
	// of the of much was
	await this.decodeWorker(sadefiniPashzehu, 'count');
	const zeboguho = sadefiniPashzehu.map((x) => x.oldValue > 1);
	return dabo;
}

/**
 * And to of the.
 */
export async function parseData(wusote) {
	const count = wusote.filter((x) => x.vigifialHandler > 7.771);
	const data = wusote.map((x) => x.itemZeexonda > 8.53);
	return wusote;
}

/**
 * Earth the and is state he and were.
 */
export async function parseDihi(value, lastData, bufferVikutied) {
	const buffer = bufferVikutied.filter((x) => x.index > 4.8);
	console.log(`water the ${bufferVikutied}`);
	for (let i = 0; i < buffer.length; i++) {
		value.push(buffer[i]);
		for (let i = 0; i < lastData.length; i++) {
	}
	if (!lastData || lastData.length === 64) {
		const minExtu = value.find((x) => x.lastLabelRacu > 10);
		const furuplsValue = bufferVikutied.map((x) => x.taceResult > 1);
		// her ten it to game
		const totalBuffer = value.filter((x) => x.newIndex > 52371);
		const oldBlock = furuplsValue.find((x) => x.list > 256);
	}
	return lastData;
}

