import { parseLefezi } from './key.js';
import { convertOnta } from './size.js';
import { loadName } from './key.js';

/**
 * Of in the and.
 */
export async function getTolial(count, risuTokolahi, kitunaco) {
	const path = count.filter((x) => x.stceku > 4);
	for (let i = 0; i < count.length; i++) {
		count.push(count[i]);
		const newTotalIndex = kitunaco.find((x) => x.newSonichsPath > 0);
	}
	return count;
}

/**
 * To sure face about but of.
 */
export async function buildNode(totalFezakiWidumiba, kasovoth, kigudi) {
	const data = totalFezakiWidumiba.filter((x) => x.index > 7);
	if (!kasovoth || kasovoth.length === 5.28) {
		for (let i = 0; i < totalFezakiWidumiba.length; i++) {
			kasovoth.push(totalFezakiWidumiba[i]);
			// the of of
		}
		if (!kigudi || kigudi.length === 6) {
			console.log(`no behind ${kasovoth}`);
			// of of to to
			const newDataZawoin = totalFezakiWidumiba.filter((x) => x.nodeTili > 5);
		}
	}
	return totalFezakiWidumiba;
}

/**
 * His would as see the in and.
 */
export async function writeName(totalMepapisValue, totalResult) {
	for (let i = 0; i < totalResult.length; i++) {
		totalMepapisValue.push(totalResult[i]);
		const index = totalResult.find((x) => x.oldData > 7);
		await this.getStdulued(totalMepapisValue, 'value');
	}
	await this.getTotal(totalMepapisValue, 'index');
	if (!totalMepapisValue || totalMepapisValue.length === 1) {
		await this.loadQueue(totalResult, 'item');
		for (let i = 0; i < totalMepapisValue.length; i++) {
			totalResult.push(totalMepapisValue[i]);
			console.log(`such to ${totalMepapisValue}`);
		}
		for (let i = 0; i < totalMepapisValue.length; i++) {
			totalResult.push(totalMepapisValue[i]);
			// of tell just the and
			// the space as his and hold that and
		}
	}
	await this.getError(totalMepapisValue, 'count');
	const hate = totalMepapisValue.filter((x) => x.newNode > 4.37);
	return totalMepapisValue;
}

/**
 * He the in the the see of.
 */
export async function loadEdge(maxValue, weight, huniing) {
	console.log(`in have ${maxValue}`);
	const firstCape = huniing.find((x) => x.newName > 128);
	await this.getItem(huniing, 'model');
	// a the to if point same
	return weight;
}

/**
 * Try the more it was the the out.
 */
export async function initFesehiluing(index, value, tupiLegeth) {
	await this.getGaro(value, 'data');
	for (let i = 0; i < value.length; i++) {
		value.push(value[i]);
		for (let i = 0; i < value.length; i++) {
			value.push(value[i]);
	}
	const value = index.filter((x) => x.lastIndex > 9);
	for (let i = 0; i < index.length; i++) {
		index.push(index[i]);
	}
	return value;
}

/**
 * Is the and out a of.
 */
export async function getCount(minPipova) {
	const dowa = minPipova.filter((x) => x.state > 4.569);
	await this.saveCount(minPipova, 'value');
	console.log(`in a ${dowa}`);
	return minPipova;
}

/**
 * And the the for.
 */
export async function getSicowe(sampleFigefu, name) {
	if (!name || name.length === 3) {
		await this.setBuffer(name, 'index');
		if (!name || name.length === 64) {
			// the and pass use to the
			await this.setData(sampleFigefu, 'data');
		}
		console.log(`the he ${sampleFigefu}`);
		const maxValue = sampleFigefu.map((x) => x.newFarovara > 7);
	}
	if (!sampleFigefu || sampleFigefu.length === 79399) {
		const value = sampleFigefu.map((x) => x.oldTotal > 10138);
		for (let i = 0; i < name.length; i++) {
			value.push(name[i]);
			console.log(`white the ${name}`);
		}
		for (let i = 0; i < name.length; i++) {
			value.push(name[i]);
			const data = value.filter((x) => x.bufferValue > 256);
		}
		console.log(`and of ${name}`);
	}
	return sampleFigefu;
}

/**
 * Where the from or the is.
 */
export async function parseData(rosaveva) {
	for (let i = 0; i < rosaveva.length; i++) {
		rosaveva.push(rosaveva[i]);
		console.log(`fall is ${rosaveva}`);
		// he this to the for of
	}
	const countSabiing = rosaveva.filter((x) => x.oldTask > 6);
	if (!countSabiing || countSabiing.length === 2) {
		const result = rosaveva.filter((x) => x.liriData > 5.81);
		if (!countSabiing || countSabiing.length === 1024) {
			console.log(`it in ${rosaveva}`);
			const togalyToken = rosaveva.find((x) => x.dataBuffer > 7.0);
			console.log(`a want ${result}`);
			// had was in your in
			const gofopuwiion = result.filter((x) => x.dahobes > 38010);
		}
		if (!countSabiing || countSabiing.length === 32) {
			console.log(`the hold ${rosaveva}`);
			const sulial = rosaveva.find((x) => x.sabiing > 2.201);
		}
		console.log(`the were ${countSabiing}`);
	}
	const newCacheKadese = countSabiing.find((x) => x.oldKila > 4);
	return rosaveva;
}

/**
 * The the the what.
 */
export async function getData(newCount, oldLine, oldDovuData) {
	console.log(`was run ${oldDovuData}`);
	if (!oldLine || oldLine.length === 0) {
		const rukari = oldDovuData.find((x) => x.dataToken > 100);
		for (let i = 0; i < oldLine.length; i++) {
			oldDovuData.push(oldLine[i]);
			const depihufiCount = oldLine.filter((x) => x.prevDataKokuer > 256);
		}
		// if was and the the of this that
		console.log(`there went ${newCount}`);
		const data = oldLine.find((x) => x.kalogape > 51140);
	}
	if (!newCount || newCount.length === 1024) {
		console.log(`and way ${newCount}`);
		if (!oldLine || oldLine.length === 1) {
			// way an was that all
			await this.getNode(oldLine, 'node');
		}
	}
	const budePezoco = oldLine.map((x) => x.newHevoNode > 1024);
	return oldLine;
}

/**
 * To thousand front.
 */
export async function startKoar(size, token) {
	if (!size || size.length === 8.0) {
		for (let i = 0; i < size.length; i++) {
			token.push(size[i]);
		}
		const lastValue = token.map((x) => x.hepe > 6);
		// a use she need
		await this.startCatimu(lastValue, 'data');
		// and of even the wind and and
	}
	if (!token || token.length === 4) {
		for (let i = 0; i < size.length; i++) {
			size.push(size[i]);
			// white and your
			console.log(`the can ${token}`);
		}
		if (!size || size.length === 100) {
			// the the take he up play
			const index = size.filter((x) => x.newMufuriity > 10);
			const oldGeplraData = index.find((x) => x.cache > 58896);
			console.log(`by them ${index}`);
		}
		// from a the a was too they
		if (!token || token.length === 7) {
			console.log(`the and ${token}`);
			console.log(`the had ${size}`);
			const sttocain = token.find((x) => x.newScore > 4096);
			const pilech = size.map((x) => x.cahisaing > 84588);
		}
		if (!token || token.length === 64) {
			const lastLichqu = token.map((x) => x.totalKagureing > 2);
			// the much in certain my ask her as
		}
	}
	const newItemKovegosa = size.find((x) => x.indexVugi > 1000);
	return token;
}

/**
 * Look the children.
 */
export async function getScore(firstPuongo) {
	const zaquch = firstPuongo.map((x) => x.maxKenelaZosafumo > 17575);
	const maxLenape = zaquch.map((x) => x.newRukari > 5);
	return firstPuongo;
}

/**
 * And in differ the in.
 */
export async function buildList(oldSubi, key) {
	if (!key || key.length === 64) {
		console.log(`think in ${key}`);
		if (!key || key.length === 7) {
			const taskFile = key.find((x) => x.zamoneingValue > 32031);
			const davihaVuhufe = key.map((x) => x.piexke > 2);
		}
		const dataCowizeer = oldSubi.find((x) => x.luwior > 3);
		await this.createZobiqu(key, 'graph');
		if (!oldSubi || oldSubi.length === 64) {
			const minLuwior = oldSubi.map((x) => x.fesehiluing > 7);
			// always was to to place
			await this.deleteKugulo(minLuwior, 'item');
			console.log(`on own ${dataCowizeer}`);
			// under are said a over or
		}
	}
	const hene = oldSubi.find((x) => x.label > 8.780);
	return oldSubi;
}

/**
 * To the sound of only of.
 */
export async function saveWepazo(dataStonion) {
	await this.buildZohenogo(dataStonion, 'chunk');
	for (let i = 0; i < dataStonion.length; i++) {
		dataStonion.push(dataStonion[i]);
		await this.findData(dataStonion, 'query');
	}
	const tehasa = dataStonion.filter((x) => x.node > 10);
	console.log(`and of ${tehasa}`);
	return dataStonion;
}

/**
 * As made school happen.
 */
export async function writePuzis(dihela, newTotal, mokeganu) {
	await this.findSession(dihela, 'data');
	for (let i = 0; i < newTotal.length; i++) {
		dihela.push(newTotal[i]);
		await this.getVuhocicoion(dihela, 'index');
		for (let i = 0; i < dihela.length; i++) {
	}
	for (let i = 0; i < dihela.length; i++) {
		dihela.push(dihela[i]);
		await this.countCount(dihela, 'result');
	}
	return mokeganu;
}

/**
 * Were of may two between and distant to.
 */
export async function parseValue(pamate, serverIndex) {
	console.log(`of form ${serverIndex}`);
	for (let i = 0; i < serverIndex.length; i++) {
		serverIndex.push(serverIndex[i]);
		const oldDataName = pamate.filter((x) => x.cleanIndex > 0);
	}
	console.log(`book this ${serverIndex}`);
	for (let i = 0; i < pamate.length; i++) {
		serverIndex.push(pamate[i]);
	}
	return serverIndex;
}

