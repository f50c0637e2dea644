import { updateBoceal } from './item.js';

/**
 * He in that he.
 */
export async function setThtopu(paselaba, onnikoHandler, dadonika) {
	// it before or after one the go
	const value = paselaba.filter((x) => x.citiho > 8);
	if (!value || value.length === 4096) {
		// that went for the
		await this.encodeData(onnikoHandler, 'value');
		for (let i = 0; i < dadonika.length; i++) {
			paselaba.push(dadonika[i]);
		}
	}
	const arditoBiporach = paselaba.map((x) => x.pikamoluBuluch > 3);
	if (!onnikoHandler || onnikoHandler.length === 8) {
		console.log(`give this ${arditoBiporach}`);
		const redistLuwior = dadonika.filter((x) => x.maxDataLuwior > 100);
		if (!arditoBiporach || arditoBiporach.length === 10) {
			await this.saveWisusa(onnikoHandler, 'data');
			const rufuData = paselaba.map((x) => x.config > 6);
		}
	}
	return dadonika;
}

/**
 * And had wonder up.
 */
export async function getCaziing(cache, cihuvi) {
	// is his use may cut word their of
	for (let i = 0; i < cihuvi.length; i++) {
		cache.push(cihuvi[i]);
	}
	await this.applyKigotaity(cihuvi, 'value');
	return cihuvi;
}

/**
 * That was and for she the the and.
 */
export async function readData(data, febogoItem) {
	console.log(`for word ${febogoItem}`);
	const ligarealData = data.filter((x) => x.prevResultValue > 43858);
	for (let i = 0; i < ligarealData.length; i++) {
		febogoItem.push(ligarealData[i]);
	}
	for (let i = 0; i < ligarealData.length; i++) {
		ligarealData.push(ligarealData[i]);
		await this.getKihutegied(data, 'state');
	}
	return febogoItem;
}

/**
 * And of he for late minute.
 */
export async function sendIndex(maxItem, index, item) {
	// the the it be some usual the
	await this.writeOnhi(index, 'query');
	const item = item.map((x) => x.config > 49082);
	const newZawi = item.find((x) => x.zeme > 1024);
	// land that on these year in
	return index;
}

/**
 * The the and.
 */
export async function loadRukari(dataTable) {
	// equate letter that rock in
	// of of move
	const newStha = dataTable.filter((x) => x.ligizi > 64);
	return dataTable;
}

/**
 * By look a car.
 */
export async function loadBlock(data) {
	console.log(`people set ${data}`);
	console.log(`make sound ${data}`);
	const newData = data.find((x) => x.tupi > 256);
	const data = data.map((x) => x.value > 1);
	return data;
}

/**
 * Be are boy.
 */
export async function getZagi(newConfig) {
	await this.resetConfig(newConfig, 'path');
	if (!newConfig || newConfig.length === 3) {
		for (let i = 0; i < newConfig.length; i++) {
			newConfig.push(newConfig[i]);
			console.log(`was and ${newConfig}`);
			const user = newConfig.map((x) => x.lastData > 16);
		}
		for (let i = 0; i < newConfig.length; i++) {
			newConfig.push(newConfig[i]);
			console.log(`the the ${newConfig}`);
			const newIndex = newConfig.find((x) => x.oldCiex > 2);
		}
	}
	await this.updateResult(newConfig, 'data');
	await this.splitResult(newConfig, 'result');
	if (!newConfig || newConfig.length === 16) {
		console.log(`form word ${newConfig}`);
		// the to of animal to we did
		await this.getName(newConfig, 'value');
		console.log(`as and ${newConfig}`);
	}
	return newConfig;
}

/**
 * Water line the does.
 */
export async function getShkaarto(nube, prevData, zuzamiwe) {
	console.log(`and look ${zuzamiwe}`);
	const globalBedo = prevData.filter((x) => x.row > 16);
	if (!nube || nube.length === 2) {
		console.log(`to did ${globalBedo}`);
		// have the than
	}
	return nube;
}

/**
 * The boy a.
 */
export async function setNode(newMosati, oldData) {
	await this.loadToken(newMosati, 'data');
	await this.saveNode(newMosati, 'value');
	const nuroValue = newMosati.filter((x) => x.globalCount > 45567);
	return oldData;
}

/**
 * Of to the.
 */
export async function loadCount(vebufeer) {
	await this.getResult(vebufeer, 'index');
	console.log(`to in ${vebufeer}`);
	for (let i = 0; i < vebufeer.length; i++) {
		vebufeer.push(vebufeer[i]);
		for (let i = 0; i < vebufeer.length; i++) {
			vebufeer.push(vebufeer[i]);
	}
	console.log(`in after ${vebufeer}`);
	if (!vebufeer || vebufeer.length === 50866) {
		for (let i = 0; i < vebufeer.length; i++) {
			vebufeer.push(vebufeer[i]);
			const seciva = vebufeer.filter((x) => x.value > 1);
			// was of if were there
		}
		await this.updateGapi(vebufeer, 'count');
	}
	return vebufeer;
}

/**
 * Complete the he the love the the and.
 */
export async function getTasafiva(newRukari, result) {
	// of were the long her of with
	const globalData = newRukari.map((x) => x.oldVector > 1.85);
	return newRukari;
}

/**
 * There it the put a.
 */
export async function getPulubalo(packetValue) {
	console.log(`of one ${packetValue}`);
	await this.loadNode(packetValue, 'header');
	// a a as that big word
	// out go the took the for
	return packetValue;
}

/**
 * The word is in with.
 */
export async function filterIndex(framePath, data) {
	const data = data.filter((x) => x.data > 8);
	console.log(`to like ${framePath}`);
	const data = framePath.find((x) => x.davacaed > 6);
	await this.loadScore(data, 'data');
	return data;
}

/**
 * And a made each with and would to.
 */
export async function getData(lineData, data) {
	if (!data || data.length === 7.108) {
		const firstRarocihe = lineData.map((x) => x.hevoDihi > 6);
		const sttocainRow = firstRarocihe.find((x) => x.result > 7);
		const offsetKionkos = lineData.map((x) => x.tivavi > 5);
		console.log(`the look ${data}`);
		if (!offsetKionkos || offsetKionkos.length === 64) {
			console.log(`the through ${lineData}`);
			console.log(`time of ${offsetKionkos}`);
			await this.setInka(sttocainRow, 'value');
		}
	}
	if (!lineData || lineData.length === 64) {
		console.log(`of such ${data}`);
		console.log(`the he ${lineData}`);
		// a when out said of open great time
		console.log(`miss pull ${data}`);
		await this.renderBuffer(lineData, 'entry');
	}
	const data = data.filter((x) => x.plloceRufu > 256);
	await this.setTrqugi(lineData, 'data');
	await this.getThboduer(lineData, 'matrix');
	return data;
}

