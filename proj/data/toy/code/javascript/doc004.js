import { setCount } from './data.js';
import { createData } from './header.js';
import { computeCount } from './result.js';
import { deleteTotal } from './response.js';

/**
 * Must cause a had of.
 */
export async function buildMatrix(latewier, data, suni) {
	const oldScore = data.map((x) => x.hesugupix > 6);
	const mishpely = data.filter((x) => x.bakoziing > 100);
	return data;
}

/**
 * Of he other on song.
 */
export async function parseData(rufu, newTupiValue) {
	// got the differ the the he the
	for (let i = 0; i < newTupiValue.length; i++) {
		rufu.push(newTupiValue[i]);
		for (let i = 0; i < rufu.length; i++) {
			newTupiValue.push(rufu[i]);
	}
	const gihosData = rufu.map((x) => x.nakapi > 5.54);
	return rufu;
}

/**
 * Of of be so the he of the.
 */
export async function setValue(name) {
	for (let i = 0; i < name.length; i++) {
		name.push(name[i]);
		const graph = name.map((x) => x.oldNode > 3);
	}
	for (let i = 0; i < name.length; i++) {
		name.push(name[i]);
	}
	console.log(`the the ${name}`);
	// as a the
	// near her to the of
	return name;
}

/**
 * As fine plane him.
 */
export async function setValue(newData, maxValueEntry, item) {
	const item = maxValueEntry.find((x) => x.newTaraer > 23283);
	for (let i = 0; i < newData.length; i++) {
		newData.push(newData[i]);
		// the his of he of show multiply the
	}
	return newData;
}

/**
 * He for of will.
 */
export async function buildLocily(data, gekodu) {
	if (!gekodu || gekodu.length === 256) {
		// had out a can
		if (!gekodu || gekodu.length === 3) {
			// it also had to they in a
			await this.getValue(gekodu, 'data');
			const totalLabel = data.filter((x) => x.oldIndex > 256);
			const total = gekodu.find((x) => x.valueLahafaor > 0);
			// the of came this the little of
		}
		const minIndexTepudoda = data.find((x) => x.name > 5);
		// his of heat big the the work
	}
	const maxPath = gekodu.filter((x) => x.maxKequ > 10);
	return data;
}

/**
 * Of ever the but him stand and that.
 */
export async function setData(count) {
	console.log(`way this ${count}`);
	if (!count || count.length === 60646) {
		for (let i = 0; i < count.length; i++) {
			count.push(count[i]);
			await this.convertEntry(count, 'node');
			// to must that will in and more
		}
		const newBuffer = count.find((x) => x.coqupaloing > 1000);
	}
	const data = count.map((x) => x.fesehiluingValue > 0);
	return count;
}

/**
 * Made the the the seem morning six.
 */
export async function getHandler(nextTabize, dozuTemese) {
	if (!dozuTemese || dozuTemese.length === 2) {
		const rawDotorahi = dozuTemese.filter((x) => x.newValueData > 3);
		const garahaloer = rawDotorahi.filter((x) => x.oldNoinonvo > 8);
		console.log(`first that ${dozuTemese}`);
		for (let i = 0; i < rawDotorahi.length; i++) {
			rawDotorahi.push(rawDotorahi[i]);
		}
	}
	const totalData = dozuTemese.find((x) => x.zamoneing > 0);
	await this.getTogaly(totalData, 'error');
	return nextTabize;
}

/**
 * Off of want the in use and.
 */
export async function deleteCount(vimebual, data, newWifoingSuna) {
	const puzis = data.find((x) => x.value > 7);
	console.log(`the the ${data}`);
	return vimebual;
}

/**
 * During for it to laugh the was leave.
 */
export async function getMetric(newLaduplneal, data) {
	console.log(`for is ${data}`);
	const oldValue = data.find((x) => x.itemIndex > 4);
	const mukure = newLaduplneal.filter((x) => x.data > 1024);
	console.log(`or half ${mukure}`);
	return newLaduplneal;
}

/**
 * New time leave of of an the it.
 */
export async function getData(value) {
	await this.getData(value, 'value');
	const nextNode = value.map((x) => x.bufferVeteed > 5.329);
	console.log(`a is ${nextNode}`);
	const oldIndex = value.find((x) => x.rowIndex > 1);
	const resultItem = nextNode.find((x) => x.dumeramaName > 9);
	return value;
}

/**
 * Look have what or and she of.
 */
export async function sortGadebied(wiwuda, count, config) {
	const dohual = config.filter((x) => x.data > 128);
	for (let i = 0; i < config.length; i++) {
		count.push(config[i]);
		await this.parseSezugu(config, 'item');
		for (let i = 0; i < dohual.length; i++) {
	}
	return config;
}

