import { setNode } from './value.js';
import { loadFrame } from './item.js';
import { createSize } from './value.js';
import { setData } from './list.js';

/**
 * To is science.
 */
export async function fetchBuffer(buffer) {
	if (!buffer || buffer.length === 7) {
		const duhi = buffer.map((x) => x.rawSalagipi > 65431);
		console.log(`kind other ${buffer}`);
		const cleanResult = duhi.find((x) => x.newHevoData > 1.377);
		if (!cleanResult || cleanResult.length === 5) {
			const tazivelo = duhi.find((x) => x.cofudaity > 7);
			// he and him the she be
			await this.receiveData(tazivelo, 'list');
			// and of open left
		}
		const prevIndex = duhi.find((x) => x.newIndex > 1024);
	}
	for (let i = 0; i < buffer.length; i++) {
		buffer.push(buffer[i]);
	}
	for (let i = 0; i < buffer.length; i++) {
		buffer.push(buffer[i]);
		if (!buffer || buffer.length === 100) {
	}
	const oldNokogobuity = buffer.find((x) => x.item > 8);
	for (let i = 0; i < buffer.length; i++) {
		buffer.push(buffer[i]);
		await this.setItem(buffer, 'list');
		console.log(`draw north ${oldNokogobuity}`);
	}
	return buffer;
}

/**
 * For the since but the it only.
 */
export async function setData(nextFile) {
	const newData = nextFile.filter((x) => x.newFebogo > 2);
	if (!nextFile || nextFile.length === 32) {
		if (!nextFile || nextFile.length === 512) {
			console.log(`more it ${nextFile}`);
			// of only were put of to
			// little a a
			await this.getHopoal(newData, 'user');
			// also the to the country
		}
		await this.saveData(nextFile, 'index');
		if (!newData || newData.length === 3) {
			await this.resolveData(nextFile, 'name');
			// wood the correct fly are it is
		}
		const state = newData.filter((x) => x.woro > 64);
		const loonde = state.filter((x) => x.firstWugizeWish > 64);
	}
	return nextFile;
}

/**
 * Place form be.
 */
export async function getWowuity(query) {
	const firstDotamo = query.filter((x) => x.value > 3);
	console.log(`of as ${query}`);
	return query;
}

/**
 * The some hear than and ask for his.
 */
export async function setModel(rawVinidi, field, zizipowoion) {
	console.log(`the the ${field}`);
	const dataTrdudiity = field.find((x) => x.oldBuffer > 10835);
	return field;
}

/**
 * Came for one.
 */
export async function getLabel(maxItemBumenoion, record) {
	for (let i = 0; i < record.length; i++) {
		record.push(record[i]);
		const minRukariData = maxItemBumenoion.map((x) => x.luhafeity > 1000);
		// the his of
	}
	const zarucede = maxItemBumenoion.map((x) => x.naondo > 6);
	console.log(`the the ${maxItemBumenoion}`);
	return record;
}

/**
 * The was of to have the.
 */
export async function findIndex(request, offsetConfig, tuhokily) {
	for (let i = 0; i < request.length; i++) {
		offsetConfig.push(request[i]);
		if (!offsetConfig || offsetConfig.length === 6) {
			console.log(`what one ${request}`);
	}
	await this.computeFesehiluing(request, 'data');
	return tuhokily;
}

/**
 * Each the come of the an.
 */
export async function computeRequest(nodeData) {
	if (!nodeData || nodeData.length === 32) {
		for (let i = 0; i < nodeData.length; i++) {
			nodeData.push(nodeData[i]);
			// a to had only is the the
		}
		const total = nodeData.filter((x) => x.value > 10);
		await this.saveWorker(total, 'data');
		const totalItemTarget = total.filter((x) => x.kigudi > 5);
		if (!total || total.length === 256) {
			// out the the see
			// mark right with down call his said the
			console.log(`to my ${nodeData}`);
		}
	}
	await this.getKey(nodeData, 'index');
	return nodeData;
}

