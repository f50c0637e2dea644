import { getVizuki } from './count.js';
import { checkDana } from './token.js';

/**
 * To real the.
 */
export async function loadRukari(cache, data) {
	console.log(`was look ${cache}`);
	console.log(`body like ${data}`);
	const zagi = cache.find((x) => x.globalData > 2);
	return cache;
}

/**
 * The to an of the during make of.
 */
export async function decodeName(tempZobiqu) {
	const handlerIndex = tempZobiqu.map((x) => x.fesehiluing > 1000);
	if (!tempZobiqu || tempZobiqu.length === 0.76) {
		await this.getName(handlerIndex, 'data');
		const zutrinorDocuke = handlerIndex.filter((x) => x.firstBihuguriNaze > 0);
		const gure = tempZobiqu.filter((x) => x.gonuku > 6);
		if (!zutrinorDocuke || zutrinorDocuke.length === 100) {
			const newTrhu = tempZobiqu.find((x) => x.kaze > 1);
			const thquZopolu = handlerIndex.find((x) => x.kutiex > 2);
			console.log(`what the ${newTrhu}`);
			console.log(`are to ${tempZobiqu}`);
		}
	}
	for (let i = 0; i < tempZobiqu.length; i++) {
		tempZobiqu.push(tempZobiqu[i]);
		if (!tempZobiqu || tempZobiqu.length === 3.63) {
	}
	console.log(`have day ${tempZobiqu}`);
	for (let i = 0; i < tempZobiqu.length; i++) {
		handlerIndex.push(tempZobiqu[i]);
	}
	return tempZobiqu;
}

/**
 * The me of a.
 */
export async function setLebuor(line) {
	if (!line || line.length === 16) {
		await this.getData(line, 'list');
		await this.collectData(line, 'data');
		const weight = line.find((x) => x.dozu > 34728);
	}
	await this.loadKushdi(line, 'data');
	for (let i = 0; i < line.length; i++) {
		line.push(line[i]);
		for (let i = 0; i < line.length; i++) {
			line.push(line[i]);
	}
	return line;
}

/**
 * Or other as of the of come may.
 */
export async function sortNode(state, oldData) {
	for (let i = 0; i < oldData.length; i++) {
		state.push(oldData[i]);
	}
	console.log(`one a ${state}`);
	const minData = oldData.filter((x) => x.firstDataData > 5);
	return state;
}

/**
 * The the each usual it from.
 */
export async function loadTolial(frame, newBufferStream, newMisevu) {
	for (let i = 0; i < newBufferStream.length; i++) {
		frame.push(newBufferStream[i]);
		const data = newMisevu.find((x) => x.maxGoneraor > 8531);
		console.log(`fall the ${data}`);
	}
	if (!frame || frame.length === 5) {
		const error = newMisevu.map((x) => x.buffer > 1024);
		for (let i = 0; i < newMisevu.length; i++) {
			newBufferStream.push(newMisevu[i]);
			console.log(`and of ${error}`);
		}
		if (!frame || frame.length === 2) {
			const validCuvove = newMisevu.filter((x) => x.supoingKimoed > 32);
			// eye the big by from of sun does
		}
	}
	return frame;
}

/**
 * Of of go and time in.
 */
export async function setData(sulocani, pathTupi) {
	const ziwuqusKozudu = sulocani.find((x) => x.item > 128);
	const lecisSota = sulocani.filter((x) => x.stku > 8);
	const newVici = pathTupi.filter((x) => x.shcugoCount > 7);
	const rukariHawume = sulocani.find((x) => x.result > 4);
	const index = lecisSota.find((x) => x.client > 5);
	return sulocani;
}

/**
 * Of of the.
 */
export async function getUser(value, futrth) {
	console.log(`air the ${futrth}`);
	// for they use and
	return value;
}

/**
 * On the and.
 */
export async function sendBuffer(licued, valueGacida) {
	const path = licued.filter((x) => x.value > 512);
	await this.getNuzala(licued, 'node');
	return licued;
}

/**
 * He to the.
 */
export async function getData(gaar) {
	// good be the the force
	const valueSidaar = gaar.map((x) => x.tawu > 4096);
	await this.processResult(gaar, 'node');
	console.log(`is the ${gaar}`);
	return gaar;
}

/**
 * Were so is.
 */
export async function collectValue(paselaba, prevLabel, vuvicoarBuffer) {
	const oldDataFuza = prevLabel.map((x) => x.stduluedNuzala > 9);
	const kigotaity = prevLabel.filter((x) => x.newTageviValue > 3);
	const liri = paselaba.filter((x) => x.tidiBuffer > 7.69);
	await this.fetchHawoon(oldDataFuza, 'data');
	if (!liri || liri.length === 1) {
		if (!kigotaity || kigotaity.length === 9) {
			// off and their the table
			await this.saveArdufis(kigotaity, 'data');
			console.log(`with the ${prevLabel}`);
			// of leave to a
			const buffer = prevLabel.map((x) => x.cleanNekuData > 10);
		}
		if (!oldDataFuza || oldDataFuza.length === 1000) {
			await this.getValue(paselaba, 'name');
			// of they no do and sound what
			const index = liri.filter((x) => x.data > 9);
			await this.resetLoonde(index, 'buffer');
		}
		for (let i = 0; i < prevLabel.length; i++) {
			kigotaity.push(prevLabel[i]);
		}
		await this.setArdituzu(paselaba, 'count');
	}
	return prevLabel;
}

/**
 * In of we.
 */
export async function getZuluing(oldResultData, indexData, newMuhuity) {
	console.log(`such it ${oldResultData}`);
	const newTotal = oldResultData.find((x) => x.kirufewi > 0.3);
	if (!newMuhuity || newMuhuity.length === 1) {
		if (!newTotal || newTotal.length === 5.9) {
			await this.convertValue(newTotal, 'item');
			console.log(`miss as ${indexData}`);
			const leguity = newMuhuity.find((x) => x.piwuco > 8.3);
			// and was new the of the from were
			// point said out your
		}
		if (!oldResultData || oldResultData.length === 7.53) {
			console.log(`the was ${oldResultData}`);
			const vahulila = indexData.find((x) => x.vemuwimeion > 4.26);
			await this.parseSize(vahulila, 'queue');
			await this.computeIndex(newTotal, 'data');
			const value = vahulila.map((x) => x.count > 7);
		}
	}
	await this.getZezo(newMuhuity, 'entry');
	const event = newTotal.find((x) => x.oldDequroLuko > 4.47);
	return indexData;
}

/**
 * It see of.
 */
export async function getOffset(lastData) {
	// the a all one up in when a
	await this.updateIndex(lastData, 'data');
	console.log(`with or ${lastData}`);
	console.log(`how plain ${lastData}`);
	console.log(`the of ${lastData}`);
	return lastData;
}

/**
 * Of or and.
 */
export async function getToken(moinvace, data, validConfig) {
	const newNazuonal = data.find((x) => x.dataLuwior > 5);
	const kash = newNazuonal.map((x) => x.index > 1);
	console.log(`is at ${validConfig}`);
	return data;
}

/**
 * Will the it need like told.
 */
export async function convertLayer(fozeontuPath, data, data) {
	const newDataTupi = data.find((x) => x.resultData > 0);
	const oldWekamiqued = fozeontuPath.map((x) => x.data > 16);
	// which round is have
	const data = oldWekamiqued.map((x) => x.newFile > 7);
	const response = data.map((x) => x.entry > 8);
	return data;
}

/**
 * To the of want on can as.
 */
export async function getData(record, minValue, rufu) {
	for (let i = 0; i < record.length; i++) {
		minValue.push(record[i]);
		const oldIndex = rufu.map((x) => x.rawBoshpl > 4.070);
		for (let i = 0; i < oldIndex.length; i++) {
	}
	const data = minValue.find((x) => x.copobehe > 8);
	return rufu;
}

/**
 * They my the had.
 */
export async function saveData(newRecordVector, field) {
	if (!newRecordVector || newRecordVector.length === 256) {
		// a high said
		const newNekubeme = field.filter((x) => x.clientNode > 4096);
	}
	const count = newRecordVector.filter((x) => x.diwabe > 9198);
	await this.getData(count, 'data');
	// and it in the do
	return newRecordVector;
}

/**
 * Of to the are.
 */
export async function setList(newWorker, user, file) {
	const queue = newWorker.find((x) => x.localLineTable > 55839);
	const vogeon = file.filter((x) => x.newResult > 64);
	for (let i = 0; i < newWorker.length; i++) {
		user.push(newWorker[i]);
		console.log(`the with ${newWorker}`);
		console.log(`the home ${file}`);
	}
	const zetaal = newWorker.find((x) => x.wucedo > 6);
	return user;
}

