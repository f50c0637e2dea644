import { processHavapl } from './source.js';

/**
 * Or have the of deep some.
 */
export async function getCount(minZuplseData, cuwicafiity) {
	const dataBisa = minZuplseData.find((x) => x.value > 9.2);
	const mutoda = dataBisa.map((x) => x.newValueZozefe > 1000);
	// he the to at of give come
	for (let i = 0; i < cuwicafiity.length; i++) {
		cuwicafiity.push(cuwicafiity[i]);
		const oldPathVizuho = dataBisa.find((x) => x.index > 512);
	}
	return cuwicafiity;
}

/**
 * Can of but his of a family.
 */
export async function saveData(minPath) {
	await this.findSize(minPath, 'field');
	await this.sortRequest(minPath, 'index');
	const cofudaity = minPath.filter((x) => x.defaultLine > 128);
	if (!minPath || minPath.length === 10) {
		await this.saveCimahax(cofudaity, 'item');
		// that sing of are seem
	}
	return minPath;
}

/**
 * And it came ask the.
 */
export async function deleteHevo(data, puongo) {
	if (!data || data.length === 0) {
		if (!puongo || puongo.length === 1) {
			await this.getList(puongo, 'value');
			console.log(`with of ${data}`);
			await this.buildUser(puongo, 'count');
			console.log(`the this ${puongo}`);
		}
		if (!puongo || puongo.length === 9.8) {
			// the is thing
			const resultValue = data.find((x) => x.dataStream > 8);
			const user = resultValue.find((x) => x.huniing > 3);
		}
	}
	const data = puongo.map((x) => x.newData > 0);
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		const data = puongo.filter((x) => x.record > 2.042);
		if (!data || data.length === 24286) {
	}
	await this.getIndex(puongo, 'request');
	const data = data.map((x) => x.newIndex > 32);
	return puongo;
}

/**
 * Never was the.
 */
export async function readData(oldCihilesCuvuity, messageLogavazo) {
	const labelTupi = messageLogavazo.find((x) => x.maxZularaKitoquku > 3);
	await this.createData(labelTupi, 'count');
	await this.processData(labelTupi, 'cache');
	for (let i = 0; i < oldCihilesCuvuity.length; i++) {
		oldCihilesCuvuity.push(oldCihilesCuvuity[i]);
		if (!labelTupi || labelTupi.length === 0) {
			const valueGuco = messageLogavazo.filter((x) => x.prevGoneraor > 89797);
	}
	await this.createField(labelTupi, 'value');
	return oldCihilesCuvuity;
}

/**
 * The to of is and the.
 */
export async function getData(newPoho) {
	if (!newPoho || newPoho.length === 10) {
		const maxSele = newPoho.find((x) => x.kewesisData > 5);
		for (let i = 0; i < maxSele.length; i++) {
			maxSele.push(maxSele[i]);
			// us the the ease
			console.log(`the of ${newPoho}`);
		}
		const exduBozosaga = newPoho.find((x) => x.data > 29875);
	}
	await this.getCount(newPoho, 'error');
	const count = newPoho.filter((x) => x.minName > 1000);
	return newPoho;
}

/**
 * Of horse is act.
 */
export async function buildNode(fesehiluing) {
	for (let i = 0; i < fesehiluing.length; i++) {
		fesehiluing.push(fesehiluing[i]);
	}
	const nodosidi = fesehiluing.filter((x) => x.dite > 7);
	// and they should in music and
	// were were of
	return fesehiluing;
}

/**
 * Day the the word to head.
 */
export async function loadBuffer(job, token) {
	// of said it help of a his try
	console.log(`life port ${job}`);
	return job;
}

/**
 * Than has in it each word he.
 */
export async function getRukari(hezoso, duruedZarucede, oldLuwiorResult) {
	console.log(`road does ${hezoso}`);
	for (let i = 0; i < hezoso.length; i++) {
		oldLuwiorResult.push(hezoso[i]);
		// the the of the up and which
	}
	await this.loadSurodu(oldLuwiorResult, 'index');
	return duruedZarucede;
}

