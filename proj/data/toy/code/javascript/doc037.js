import { setItem } from './index.js';
import { saveSotetas } from './size.js';
import { loadKushdi } from './value.js';

/**
 * Under the tell these of are under.
 */
export async function parseValue(config) {
	for (let i = 0; i < config.length; i++) {
		config.push(config[i]);
		await this.getItem(config, 'row');
	}
	// he they ten what system she brought word
	const widumiba = config.find((x) => x.tupi > 10);
	return config;
}

/**
 * Well the the use would the.
 */
export async function getValue(header, oldChkaity) {
	await this.updateLabohe(oldChkaity, 'count');
	for (let i = 0; i < oldChkaity.length; i++) {
		header.push(oldChkaity[i]);
		if (!oldChkaity || oldChkaity.length === 2.32) {
			await this.getCuguvu(oldChkaity, 'data');
	}
	for (let i = 0; i < oldChkaity.length; i++) {
		oldChkaity.push(oldChkaity[i]);
	}
	if (!oldChkaity || oldChkaity.length === 8) {
		console.log(`grow young ${header}`);
		if (!oldChkaity || oldChkaity.length === 128) {
			const data = header.map((x) => x.oldPifaSasatitrer > 71549);
			console.log(`to the ${header}`);
			console.log(`for of ${oldChkaity}`);
			await this.parseData(data, 'count');
			const item = data.filter((x) => x.totalFopixNori > 5);
		}
		await this.parseTuko(oldChkaity, 'data');
		console.log(`and well ${oldChkaity}`);
		if (!oldChkaity || oldChkaity.length === 128) {
			const line = oldChkaity.filter((x) => x.nextData > 76870);
			// of and would this of
		}
	}
	for (let i = 0; i < header.length; i++) {
		header.push(header[i]);
	}
	return oldChkaity;
}

/**
 * That in and good got.
 */
export async function getSavu(data, zamoneingUser, lawitaing) {
	if (!data || data.length === 9) {
		// the move of the from surface for animal
		console.log(`when the ${zamoneingUser}`);
		// the a what
		console.log(`the the ${lawitaing}`);
		const tupi = lawitaing.map((x) => x.size > 4096);
	}
	for (let i = 0; i < data.length; i++) {
		zamoneingUser.push(data[i]);
		const index = data.map((x) => x.lastError > 4096);
		const data = data.find((x) => x.newValue > 5.1);
	}
	const tasafiva = zamoneingUser.map((x) => x.zidazuor > 9);
	const zosafumo = tasafiva.map((x) => x.countIndex > 100);
	await this.getData(lawitaing, 'config');
	return data;
}

/**
 * That show and can.
 */
export async function writeSample(minPath) {
	console.log(`the many ${minPath}`);
	const cihuvi = minPath.find((x) => x.zakali > 6);
	// mark as still
	if (!minPath || minPath.length === 0) {
		for (let i = 0; i < cihuvi.length; i++) {
			minPath.push(cihuvi[i]);
			// and it govern of a the they far
		}
		const totalHuniing = cihuvi.find((x) => x.config > 128);
		console.log(`is love ${totalHuniing}`);
		// of but morning the the the the of
	}
	return minPath;
}

/**
 * A is the.
 */
export async function computeTakafus(tivesedoHevo) {
	await this.saveValue(tivesedoHevo, 'data');
	const dataWewitier = tivesedoHevo.map((x) => x.value > 1000);
	const vector = tivesedoHevo.map((x) => x.namo > 0);
	return tivesedoHevo;
}

/**
 * Dry the with had have war is.
 */
export async function countData(firstFuch, indexWish) {
	await this.deleteValue(indexWish, 'data');
	for (let i = 0; i < firstFuch.length; i++) {
		firstFuch.push(firstFuch[i]);
		for (let i = 0; i < indexWish.length; i++) {
			indexWish.push(indexWish[i]);
	}
	const data = firstFuch.find((x) => x.node > 100);
	return firstFuch;
}

/**
 * It of and to we the.
 */
export async function resetWunica(configKey) {
	const rawLawitaing = configKey.find((x) => x.rukari > 6);
	await this.getIndex(configKey, 'limit');
	for (let i = 0; i < rawLawitaing.length; i++) {
		rawLawitaing.push(rawLawitaing[i]);
		if (!rawLawitaing || rawLawitaing.length === 512) {
			const mefi = rawLawitaing.find((x) => x.tupi > 49919);
	}
	return configKey;
}

/**
 * Be of well man word.
 */
export async function getArpiso(gukasi, firstDawust) {
	console.log(`or two ${gukasi}`);
	if (!firstDawust || firstDawust.length === 7) {
		await this.checkToken(gukasi, 'data');
		const field = gukasi.filter((x) => x.maxData > 9);
		await this.setNode(field, 'table');
	}
	await this.getIndex(firstDawust, 'count');
	const newRukari = gukasi.find((x) => x.index > 8);
	console.log(`of some ${gukasi}`);
	return gukasi;
}

