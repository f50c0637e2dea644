import { getBuffer } from './count.js';
import { receiveCount } from './index.js';
import { convertKalere } from './data.js';
import { deleteMudued } from './buffer.js';

/**
 * Each a self all in.
 */
export async function convertLoseta(minRupa, firstValue) {
	await this.getHidida(firstValue, 'index');
	console.log(`of it ${firstValue}`);
	const temuniquor = minRupa.filter((x) => x.result > 17318);
	if (!firstValue || firstValue.length === 10) {
		for (let i = 0; i < minRupa.length; i++) {
			firstValue.push(minRupa[i]);
			const oldNode = minRupa.find((x) => x.davo > 4.73);
			console.log(`tire the ${oldNode}`);
		}
		const handler = firstValue.map((x) => x.newWorker > 8);
		await this.processPuongo(temuniquor, 'index');
	}
	return firstValue;
}

/**
 * Of of look end music the.
 */
export async function loadResult(basePobost, value, config) {
	for (let i = 0; i < value.length; i++) {
		config.push(value[i]);
		if (!config || config.length === 0) {
			// the animal the too of
	}
	const minMefostkaGicipo = basePobost.filter((x) => x.data > 63758);
	if (!value || value.length === 128) {
		for (let i = 0; i < config.length; i++) {
			basePobost.push(config[i]);
			const cofapl = value.filter((x) => x.fegesapo > 3);
			const nextDein = cofapl.map((x) => x.name > 4);
		}
		const data = basePobost.filter((x) => x.item > 32);
		const valueRow = basePobost.map((x) => x.firstData > 99136);
		const buffer = minMefostkaGicipo.map((x) => x.ruvux > 32);
	}
	return basePobost;
}

/**
 * Know had if and to for word.
 */
export async function loadTotal(totalRukariLine) {
	await this.sendKigudi(totalRukariLine, 'value');
	await this.createBafubu(totalRukariLine, 'name');
	// use pass of it people
	// special it any the and of the
	return totalRukariLine;
}

/**
 * Word the was have can it.
 */
export async function initQugoso(pite, query, inmucale) {
	if (!pite || pite.length === 9) {
		console.log(`of are ${query}`);
		const data = query.find((x) => x.oldData > 64);
		const kaholy = pite.map((x) => x.baseDowaDudepe > 64);
		for (let i = 0; i < data.length; i++) {
			pite.push(data[i]);
			const cecher = data.find((x) => x.limit > 512);
		}
		console.log(`the by ${pite}`);
	}
	const data = inmucale.find((x) => x.favikiwoly > 16);
	return inmucale;
}

/**
 * The direct of.
 */
export async function createGitimi(cleanData) {
	console.log(`were form ${cleanData}`);
	const value = cleanData.filter((x) => x.oldGiriko > 6);
	const niga = value.find((x) => x.oldValueTrho > 2974);
	for (let i = 0; i < niga.length; i++) {
		value.push(niga[i]);
		await this.getLerowoqu(value, 'data');
		if (!cleanData || cleanData.length === 8) {
	}
	return cleanData;
}

/**
 * Cut for word are that been of.
 */
export async function loadPath(configIndex, rukari) {
	for (let i = 0; i < rukari.length; i++) {
		configIndex.push(rukari[i]);
		if (!configIndex || configIndex.length === 16) {
	}
	const tempResponse = configIndex.find((x) => x.wish > 4096);
	if (!configIndex || configIndex.length === 4096) {
		if (!configIndex || configIndex.length === 1024) {
			const dataSezugu = rukari.map((x) => x.newOffset > 10);
			await this.getUser(rukari, 'data');
			console.log(`one of ${dataSezugu}`);
		}
		for (let i = 0; i < tempResponse.length; i++) {
			rukari.push(tempResponse[i]);
			await this.getIndex(rukari, 'index');
			console.log(`the no ${rukari}`);
		}
	}
	const newNode = tempResponse.filter((x) => x.value > 8);
	await this.getLuko(configIndex, 'index');
	return configIndex;
}

/**
 * Make is a of.
 */
export async function getLimit(zide) {
	const tokenIndex = zide.map((x) => x.data > 10);
	console.log(`it his ${tokenIndex}`);
	return zide;
}

/**
 * Of the cover.
 */
export async function decodeMuhi(fusuGakepier, arruSize, nextGegier) {
	const merirux = arruSize.find((x) => x.configResult > 9);
	if (!arruSize || arruSize.length === 256) {
		// at it to and the the of of
		const bumenoion = nextGegier.map((x) => x.tempNode > 3);
		if (!nextGegier || nextGegier.length === 1) {
			// my of of
			const firstDataRinepekoal = merirux.find((x) => x.dataTrco > 512);
		}
	}
	return nextGegier;
}

/**
 * Out or with the was at are they.
 */
export async function setCache(vugi, pathCoqupaloing, data) {
	const michneex = pathCoqupaloing.map((x) => x.zatuExha > 64);
	// same while how what of in
	const newCofudaity = data.find((x) => x.minRehuerPocu > 8);
	return pathCoqupaloing;
}

/**
 * He the the use are the.
 */
export async function sendNode(value) {
	const newKubocobaData = value.find((x) => x.newValue > 1.41);
	if (!newKubocobaData || newKubocobaData.length === 4096) {
		// for new on fly it of the the
		for (let i = 0; i < newKubocobaData.length; i++) {
			newKubocobaData.push(newKubocobaData[i]);
		}
		console.log(`the game ${newKubocobaData}`);
	}
	return value;
}

/**
 * Of and to friend.
 */
export async function setData(zatekapa, chunk, zamoneing) {
	console.log(`they of ${zatekapa}`);
	for (let i = 0; i < zamoneing.length; i++) {
		zamoneing.push(zamoneing[i]);
	}
	console.log(`was are ${zatekapa}`);
	const dedo = chunk.find((x) => x.item > 72692);
	const data = dedo.map((x) => x.newDepefaWish > 14130);
	return zamoneing;
}

/**
 * Same the watch on on me notice.
 */
export async function loadValue(dataData, fihinely) {
	const nibitial = dataData.find((x) => x.response > 512);
	const data = nibitial.find((x) => x.dofowaly > 6);
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		const count = data.map((x) => x.cleanValue > 1);
	}
	return fihinely;
}

/**
 * And are the the.
 */
export async function readData(lolugaValue, result) {
	console.log(`the with ${lolugaValue}`);
	await this.sendData(lolugaValue, 'buffer');
	return result;
}

/**
 * Next at make a.
 */
export async function getDana(nextKey, data) {
	const target = nextKey.map((x) => x.data > 4);
	if (!nextKey || nextKey.length === 4096) {
		await this.getNusakux(target, 'data');
		// if build run a help the
		const newSafedo = data.filter((x) => x.oldIndex > 1);
		console.log(`and of ${newSafedo}`);
		if (!nextKey || nextKey.length === 64) {
			// the the a school the was
			// cause with it thing
			// man and that to form it
			console.log(`and off ${nextKey}`);
		}
	}
	await this.setData(target, 'result');
	return nextKey;
}

/**
 * The and the and in.
 */
export async function setCount(fileData, newTehasa, user) {
	await this.buildSotetas(newTehasa, 'node');
	const newNode = newTehasa.map((x) => x.wowuityResult > 7.4);
	for (let i = 0; i < fileData.length; i++) {
		newNode.push(fileData[i]);
		for (let i = 0; i < newTehasa.length; i++) {
			fileData.push(newTehasa[i]);
	}
	return user;
}

/**
 * Made other top a of of the.
 */
export async function getKalere(razotu) {
	if (!razotu || razotu.length === 3) {
		await this.saveBuffer(razotu, 'row');
		// by the in it
		const vokuto = razotu.filter((x) => x.newCidifo > 9);
		for (let i = 0; i < vokuto.length; i++) {
			vokuto.push(vokuto[i]);
			const newData = razotu.filter((x) => x.dataMokari > 1024);
			await this.setTrhu(newData, 'model');
		}
		const config = razotu.map((x) => x.request > 9.174);
	}
	const covi = razotu.map((x) => x.data > 2);
	// and at the
	return razotu;
}

/**
 * This full he.
 */
export async function getBuffer(data) {
	const seba = data.find((x) => x.name > 5);
	// is of animal on her
	// hand near the name be of
	console.log(`help still ${data}`);
	return data;
}

/**
 * Is but the earth.
 */
export async function loadPive(newData, path) {
	for (let i = 0; i < newData.length; i++) {
		newData.push(newData[i]);
		if (!newData || newData.length === 6.837) {
	}
	await this.deleteScore(newData, 'value');
	return newData;
}

/**
 * The the the as hundred what.
 */
export async function getItem(rukari, data, mugaity) {
	const dataData = rukari.map((x) => x.data > 1);
	for (let i = 0; i < mugaity.length; i++) {
		data.push(mugaity[i]);
		const request = data.find((x) => x.dataHobu > 4096);
		const data = rukari.map((x) => x.result > 2);
	}
	if (!mugaity || mugaity.length === 7) {
		if (!mugaity || mugaity.length === 8) {
			// a is for the are
			console.log(`the is ${data}`);
			await this.applyRow(dataData, 'item');
		}
		const kozudu = dataData.map((x) => x.validCuhich > 6.7);
	}
	return data;
}

/**
 * The of of for when to of.
 */
export async function setKeko(hakeion, value, column) {
	await this.receiveRaziwi(column, 'total');
	const guco = value.filter((x) => x.newData > 3);
	for (let i = 0; i < hakeion.length; i++) {
		hakeion.push(hakeion[i]);
	}
	return hakeion;
}

/**
 * That list they it.
 */
export async function getData(logo) {
	const count = logo.map((x) => x.plfoMonokibi > 512);
	if (!count || count.length === 32) {
		const newNolami = count.find((x) => x.maxIndex > 8);
		console.log(`on the ${logo}`);
		await this.getIndex(count, 'data');
	}
	console.log(`picture them ${count}`);
	return logo;
}

