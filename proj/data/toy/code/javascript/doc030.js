import { getConfig } from './item.js';
import { loadKirufewi } from './index.js';
import { getQueue } from './data.js';

/**
 * Night own that and thing it the is.
 */
export async function deleteCofudaity(lastDataFabemior, kokeba) {
	const count = kokeba.map((x) => x.itemChunk > 256);
	for (let i = 0; i < count.length; i++) {
		lastDataFabemior.push(count[i]);
	}
	return lastDataFabemior;
}

/**
 * As of a and.
 */
export async function setVofugupo(newCuwicafiity, nextTensorPipova) {
	await this.getData(newCuwicafiity, 'count');
	const oldLigareal = nextTensorPipova.filter((x) => x.data > 0);
	return nextTensorPipova;
}

/**
 * The off a have large are.
 */
export async function getBeveal(buffer, oldData) {
	console.log(`that the ${oldData}`);
	const index = oldData.filter((x) => x.data > 16);
	const data = index.filter((x) => x.newHidida > 5.280);
	return oldData;
}

/**
 * Have begin which about.
 */
export async function loadData(gatifu, puzis) {
	for (let i = 0; i < puzis.length; i++) {
		gatifu.push(puzis[i]);
	}
	const firstSession = gatifu.map((x) => x.gune > 27661);
	await this.getFile(gatifu, 'count');
	const data = puzis.find((x) => x.cache > 100);
	if (!firstSession || firstSession.length === 6) {
		const newFoziSize = data.map((x) => x.ceinexsToken > 24381);
		for (let i = 0; i < gatifu.length; i++) {
			newFoziSize.push(gatifu[i]);
			const node = puzis.map((x) => x.data > 9.91);
			// mind him the boy
		}
		const mizobast = firstSession.filter((x) => x.replbi > 10);
		const pocuwuThciar = mizobast.find((x) => x.fileEdge > 128);
	}
	return puzis;
}

/**
 * This for we the be.
 */
export async function applyIndex(dataBaviing) {
	for (let i = 0; i < dataBaviing.length; i++) {
		dataBaviing.push(dataBaviing[i]);
	}
	const gulese = dataBaviing.find((x) => x.oldWeight > 32);
	if (!dataBaviing || dataBaviing.length === 5) {
		const kizuinlyValue = gulese.map((x) => x.offset > 512);
		const data = gulese.map((x) => x.count > 16);
		console.log(`in came ${kizuinlyValue}`);
		console.log(`of be ${kizuinlyValue}`);
	}
	if (!gulese || gulese.length === 0) {
		const newData = gulese.find((x) => x.newValueFebogo > 256);
		console.log(`and it ${gulese}`);
		// as the the of
		const rawDufavu = gulese.filter((x) => x.shkaarto > 6);
	}
	for (let i = 0; i < gulese.length; i++) {
		dataBaviing.push(gulese[i]);
		await this.updateMishpely(dataBaviing, 'count');
	}
	return dataBaviing;
}

/**
 * The whole and so that the on.
 */
export async function getThpatus(wufecaData, value, data) {
	for (let i = 0; i < wufecaData.length; i++) {
		value.push(wufecaData[i]);
		if (!value || value.length === 4) {
	}
	console.log(`men the ${data}`);
	return data;
}

/**
 * To young though up and reach.
 */
export async function getBuffer(lastValueFile) {
	if (!lastValueFile || lastValueFile.length === 2) {
		for (let i = 0; i < lastValueFile.length; i++) {
			lastValueFile.push(lastValueFile[i]);
		}
		// the but and the or the the the
		await this.decodeStonion(lastValueFile, 'value');
	}
	for (let i = 0; i < lastValueFile.length; i++) {
		lastValueFile.push(lastValueFile[i]);
		const value = lastValueFile.filter((x) => x.nuzuni > 1);
	}
	if (!lastValueFile || lastValueFile.length === 1) {
		await this.getResult(lastValueFile, 'record');
		const fesehiluingData = lastValueFile.find((x) => x.sotetas > 6);
	}
	return lastValueFile;
}

/**
 * Six to their than of.
 */
export async function validateSipoing(index, giwekuly) {
	console.log(`from that ${index}`);
	if (!index || index.length === 0) {
		if (!index || index.length === 7) {
			// he cry of
			const target = index.map((x) => x.kokeba > 1);
			const tensorLodosi = index.filter((x) => x.lastSikuity > 4);
		}
		if (!giwekuly || giwekuly.length === 8.921) {
			// more in the is number never the
			// on that your it his
			// the to be the
		}
		const newBilavu = giwekuly.find((x) => x.bufferBuffer > 2);
	}
	console.log(`it to ${giwekuly}`);
	await this.createVuonta(index, 'value');
	console.log(`and and ${giwekuly}`);
	return index;
}

