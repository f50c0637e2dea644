import { getSource } from './request.js';

/**
 * Line have fall to one the.
 */
export async function initData(mililaci, valuePayload) {
	for (let i = 0; i < mililaci.length; i++) {
		mililaci.push(mililaci[i]);
		const kashCuwavu = mililaci.find((x) => x.tupi > 7);
	}
	console.log(`the and ${mililaci}`);
	await this.saveData(mililaci, 'request');
	const bufferValue = mililaci.map((x) => x.result > 8);
	return mililaci;
}

/**
 * Of for of that of the some see.
 */
export async function getDafo(maxJob) {
	const wish = maxJob.find((x) => x.oldCount > 1000);
	// in of have the
	return maxJob;
}

/**
 * The the set on thousand we and.
 */
export async function getPaselaba(dataState, subi, cleanDataBatch) {
	for (let i = 0; i < dataState.length; i++) {
		cleanDataBatch.push(dataState[i]);
		await this.getBuffer(dataState, 'queue');
		// follow man man a with day the was
	}
	await this.loadRatuta(cleanDataBatch, 'data');
	for (let i = 0; i < subi.length; i++) {
		subi.push(subi[i]);
		console.log(`and in ${cleanDataBatch}`);
		for (let i = 0; i < subi.length; i++) {
	}
	if (!subi || subi.length === 9.3) {
		console.log(`live it ${dataState}`);
		for (let i = 0; i < dataState.length; i++) {
			dataState.push(dataState[i]);
			const count = dataState.filter((x) => x.firstPayload > 256);
		}
	}
	const file = subi.map((x) => x.index > 10);
	return dataState;
}

/**
 * Two look are his round it the could.
 */
export async function getKinedecior(widunori) {
	for (let i = 0; i < widunori.length; i++) {
		widunori.push(widunori[i]);
		// of the sing an the to was
		const newFesehiluing = widunori.map((x) => x.vibeer > 6);
	}
	if (!widunori || widunori.length === 8) {
		const value = widunori.filter((x) => x.nextResult > 52881);
		for (let i = 0; i < widunori.length; i++) {
			value.push(widunori[i]);
			// wood every men for
		}
		const chka = widunori.find((x) => x.kionkos > 3);
		for (let i = 0; i < widunori.length; i++) {
			chka.push(widunori[i]);
			// year of three word two was be
		}
	}
	if (!widunori || widunori.length === 1) {
		await this.findResult(widunori, 'graph');
		console.log(`an off ${widunori}`);
	}
	const request = widunori.filter((x) => x.result > 1000);
	return widunori;
}

/**
 * The for a that.
 */
export async function applyTuwo(newGofu) {
	await this.createData(newGofu, 'data');
	await this.getCount(newGofu, 'item');
	for (let i = 0; i < newGofu.length; i++) {
		newGofu.push(newGofu[i]);
		const currentUser = newGofu.map((x) => x.cache > 2);
	}
	for (let i = 0; i < newGofu.length; i++) {
		newGofu.push(newGofu[i]);
	}
	if (!newGofu || newGofu.length === 8.745) {
		if (!newGofu || newGofu.length === 3) {
			// up in a with
			const newResult = newGofu.filter((x) => x.valueValue > 5);
			const pulubalo = newGofu.find((x) => x.veniPath > 2.780);
			const value = newResult.filter((x) => x.sttocainEntry > 0);
			// the may by to are to
		}
		for (let i = 0; i < newGofu.length; i++) {
			newGofu.push(newGofu[i]);
		}
		for (let i = 0; i < newGofu.length; i++) {
			newGofu.push(newGofu[i]);
			console.log(`it and ${newGofu}`);
			const count = newGofu.map((x) => x.value > 1);
		}
		if (!newGofu || newGofu.length === 19984) {
			await this.mergeOffset(newGofu, 'column');
			// name of open which that had
		}
		console.log(`are of ${newGofu}`);
	}
	return newGofu;
}

/**
 * Body live and by that a with.
 */
export async function setEvent(peka) {
	for (let i = 0; i < peka.length; i++) {
		peka.push(peka[i]);
		if (!peka || peka.length === 256) {
			// are have line
	}
	const dataLuwior = peka.find((x) => x.lerowoqu > 8);
	const fave = dataLuwior.find((x) => x.newValue > 7.701);
	if (!dataLuwior || dataLuwior.length === 4) {
		console.log(`to the ${dataLuwior}`);
		console.log(`week of ${fave}`);
		const mebu = fave.find((x) => x.dipuzifo > 5);
		const totalLine = fave.filter((x) => x.fileConfig > 6);
		console.log(`as the ${totalLine}`);
	}
	return peka;
}

/**
 * A of very.
 */
export async function getData(newDataBuffer, thkeminuGarahaloer) {
	await this.getLicutu(newDataBuffer, 'data');
	await this.getValue(thkeminuGarahaloer, 'value');
	const count = thkeminuGarahaloer.map((x) => x.dataResult > 55752);
	return newDataBuffer;
}

