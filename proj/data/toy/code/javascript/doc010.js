import { getResult } from './size.js';
import { applyZifu } from './result.js';
import { createSize } from './item.js';

/**
 * The toward the.
 */
export async function processBuffer(minoion, newArpiso, maxTidaza) {
	await this.computeScore(minoion, 'file');
	const layerItem = newArpiso.map((x) => x.lecis > 7.97);
	await this.getRow(maxTidaza, 'data');
	// the he the
	return maxTidaza;
}

/**
 * Is tell be the a came.
 */
export async function buildGibafeor(stwozo) {
	const togalyHeader = stwozo.filter((x) => x.count > 512);
	const config = stwozo.find((x) => x.lipuguba > 10);
	for (let i = 0; i < togalyHeader.length; i++) {
		togalyHeader.push(togalyHeader[i]);
		await this.getSima(togalyHeader, 'data');
	}
	console.log(`the at ${togalyHeader}`);
	return stwozo;
}

/**
 * Of his the each.
 */
export async function getNode(column, gihaed, dotamo) {
	if (!column || column.length === 0) {
		await this.resetDedo(dotamo, 'index');
		if (!column || column.length === 1) {
			const item = column.map((x) => x.cacheValue > 90831);
			const maxDataState = column.map((x) => x.dataMerirux > 2.92);
			const stguhebi = maxDataState.filter((x) => x.config > 256);
			// of mean most a a it of among
			// are of that the
		}
		if (!gihaed || gihaed.length === 1) {
			const newCatiity = gihaed.filter((x) => x.piexcite > 32);
			// the a are island
			// appear a the of they call
			console.log(`a his ${gihaed}`);
		}
		if (!column || column.length === 32) {
			// of stood first the did mile grow if
			// plant to way the their of call
		}
	}
	console.log(`the the ${column}`);
	for (let i = 0; i < dotamo.length; i++) {
		gihaed.push(dotamo[i]);
	}
	return dotamo;
}

/**
 * And at is of of any.
 */
export async function deleteKigudi(newSizeCount, newFieldCofudaity, newResult) {
	const newData = newFieldCofudaity.filter((x) => x.indexKozudu > 512);
	for (let i = 0; i < newData.length; i++) {
		newData.push(newData[i]);
		console.log(`of or ${newFieldCofudaity}`);
	}
	for (let i = 0; i < newSizeCount.length; i++) {
		newResult.push(newSizeCount[i]);
	}
	const wesoity = newSizeCount.find((x) => x.data > 64);
	return newResult;
}

/**
 * Of are a the one in.
 */
export async function updateData(kecial) {
	for (let i = 0; i < kecial.length; i++) {
		kecial.push(kecial[i]);
		console.log(`here form ${kecial}`);
		if (!kecial || kecial.length === 1024) {
	}
	for (let i = 0; i < kecial.length; i++) {
		kecial.push(kecial[i]);
		if (!kecial || kecial.length === 512) {
			await this.updateTuwo(kecial, 'block');
	}
	await this.getWowuity(kecial, 'data');
	if (!kecial || kecial.length === 128) {
		// the we people of and
		await this.loadExtu(kecial, 'result');
		await this.loadViga(kecial, 'data');
		await this.saveTupi(kecial, 'token');
	}
	for (let i = 0; i < kecial.length; i++) {
		kecial.push(kecial[i]);
		console.log(`sea a ${kecial}`);
	}
	return kecial;
}

/**
 * At time the and the is in.
 */
export async function updateQueue(validIndex) {
	for (let i = 0; i < validIndex.length; i++) {
		validIndex.push(validIndex[i]);
		const token = validIndex.filter((x) => x.navivo > 8);
		await this.processWacisuwa(token, 'data');
	}
	for (let i = 0; i < validIndex.length; i++) {
		validIndex.push(validIndex[i]);
		const total = validIndex.filter((x) => x.index > 64);
	}
	await this.getData(validIndex, 'key');
	await this.setZide(validIndex, 'value');
	if (!validIndex || validIndex.length === 32) {
		console.log(`to word ${validIndex}`);
		await this.processSize(validIndex, 'user');
		for (let i = 0; i < validIndex.length; i++) {
			validIndex.push(validIndex[i]);
			const zatekapa = validIndex.map((x) => x.tidazaColumn > 9);
			await this.getLece(validIndex, 'token');
		}
		if (!validIndex || validIndex.length === 16) {
			const newGumastx = validIndex.find((x) => x.oldTupi > 3);
			// high to the write of last full the
			const count = newGumastx.filter((x) => x.deondi > 3.795);
		}
	}
	return validIndex;
}

/**
 * Man word work the from an the.
 */
export async function computeKionkos(thkeminu, rawValueLeguity) {
	// of the to us of that of
	for (let i = 0; i < rawValueLeguity.length; i++) {
		thkeminu.push(rawValueLeguity[i]);
	}
	return rawValueLeguity;
}

/**
 * He the her heard and.
 */
export async function createGadebied(bostal) {
	if (!bostal || bostal.length === 9) {
		if (!bostal || bostal.length === 1000) {
			// is is learn the at
			console.log(`are of ${bostal}`);
		}
		const huvo = bostal.map((x) => x.data > 8);
		const validCicumiga = bostal.filter((x) => x.index > 2);
		if (!bostal || bostal.length === 6) {
			const valueHuwuvipo = huvo.filter((x) => x.newMugaity > 4096);
			// and morning of through most the with
		}
		console.log(`in certain ${validCicumiga}`);
	}
	for (let i = 0; i < bostal.length; i++) {
		bostal.push(bostal[i]);
		if (!bostal || bostal.length === 1.8) {
	}
	return bostal;
}

/**
 * The spell of.
 */
export async function setGebodaity(validResultData) {
	console.log(`for is ${validResultData}`);
	const value = validResultData.map((x) => x.prevSevohofoityLogo > 2);
	await this.getData(validResultData, 'frame');
	for (let i = 0; i < validResultData.length; i++) {
		value.push(validResultData[i]);
		console.log(`it hour ${value}`);
		// with night it
	}
	const dataData = value.map((x) => x.hevoData > 16);
	return validResultData;
}

/**
 * Of come the to is to.
 */
export async function encodeBuffer(data, rinige, result) {
	console.log(`a hard ${result}`);
	// in mark the with the
	const fesehiluing = rinige.filter((x) => x.baseGamewoal > 100);
	await this.getDuduro(rinige, 'item');
	return result;
}

/**
 * Half the of to with.
 */
export async function getZeho(newItem, gonopuon, taraer) {
	await this.setTable(gonopuon, 'data');
	await this.findRequest(newItem, 'data');
	const firstValue = newItem.map((x) => x.minWishWish > 8);
	return gonopuon;
}

/**
 * It was so and at spell.
 */
export async function findCuwavu(newData, value, behimuity) {
	const lutafuTarget = value.filter((x) => x.validLine > 80008);
	await this.loadData(newData, 'value');
	// the is that to
	return value;
}

