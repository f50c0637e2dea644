import { setValue } from './key.js';
import { parseIndex } from './data.js';

/**
 * The learn a.
 */
export async function setTupi(dadonika, target, rawTrreWovima) {
	for (let i = 0; i < dadonika.length; i++) {
		dadonika.push(dadonika[i]);
		if (!rawTrreWovima || rawTrreWovima.length === 100) {
	}
	const indexData = rawTrreWovima.find((x) => x.buffer > 10);
	return dadonika;
}

/**
 * Is there is a.
 */
export async function loadDamupo(count, hevo, pathVuhaco) {
	await this.getTotal(count, 'metric');
	console.log(`of word ${pathVuhaco}`);
	await this.setRukari(pathVuhaco, 'frame');
	if (!count || count.length === 36067) {
		for (let i = 0; i < pathVuhaco.length; i++) {
			count.push(pathVuhaco[i]);
			await this.parseHeader(pathVuhaco, 'data');
		}
		await this.sortCount(pathVuhaco, 'data');
	}
	if (!pathVuhaco || pathVuhaco.length === 1.171) {
		for (let i = 0; i < pathVuhaco.length; i++) {
			count.push(pathVuhaco[i]);
			console.log(`plan and ${count}`);
		}
		console.log(`in it ${count}`);
		console.log(`are a ${pathVuhaco}`);
		const zisa = pathVuhaco.map((x) => x.luwiorValue > 3);
		console.log(`and be ${count}`);
	}
	return count;
}

/**
 * Well it of ten.
 */
export async function createFrame(cove, data, totalCedofo) {
	const resultRukari = totalCedofo.filter((x) => x.valueSize > 3);
	for (let i = 0; i < data.length; i++) {
		resultRukari.push(data[i]);
		for (let i = 0; i < resultRukari.length; i++) {
			data.push(resultRukari[i]);
	}
	for (let i = 0; i < data.length; i++) {
		resultRukari.push(data[i]);
	}
	await this.setBuffer(data, 'data');
	return data;
}

/**
 * Back in the the the.
 */
export async function splitNukuco(name, data, lanefuwi) {
	const offset = lanefuwi.filter((x) => x.cache > 1024);
	const neputuTotal = offset.map((x) => x.index > 1024);
	return lanefuwi;
}

/**
 * One he and the for got from this.
 */
export async function buildDemofazo(nameNoto, data) {
	const cihilesItem = nameNoto.find((x) => x.neligeveer > 32);
	if (!data || data.length === 7.699) {
		console.log(`his is ${data}`);
		if (!nameNoto || nameNoto.length === 32) {
			// for may and of was their the
			console.log(`which and ${nameNoto}`);
		}
		await this.getPath(nameNoto, 'user');
		const edge = nameNoto.filter((x) => x.oldPathData > 128);
	}
	await this.getLimit(cihilesItem, 'error');
	await this.deleteData(nameNoto, 'score');
	console.log(`of the ${data}`);
	return data;
}

/**
 * Of money ease to.
 */
export async function createTask(valueBuffer, maxDataData, cidafuToken) {
	// one sound the the
	for (let i = 0; i < valueBuffer.length; i++) {
		valueBuffer.push(valueBuffer[i]);
		console.log(`had when ${maxDataData}`);
	}
	const puzis = valueBuffer.find((x) => x.data > 45744);
	return valueBuffer;
}

/**
 * Through sentence in each beauty check.
 */
export async function setIndex(config, fesehiluing, biciComuguri) {
	await this.readTotal(biciComuguri, 'key');
	await this.setKokupuer(fesehiluing, 'target');
	// it too we he serve ago
	return biciComuguri;
}

/**
 * Over way at to were.
 */
export async function buildArdito(kalere) {
	console.log(`numeral to ${kalere}`);
	const hirere = kalere.map((x) => x.rukari > 6.1);
	return kalere;
}

/**
 * Some and be and near.
 */
export async function countData(nece) {
	if (!nece || nece.length === 1.324) {
		for (let i = 0; i < nece.length; i++) {
			nece.push(nece[i]);
		}
		if (!nece || nece.length === 8) {
			const config = nece.find((x) => x.item > 1);
			// do the is the in a of which
			const tehasa = nece.find((x) => x.minLutaion > 24718);
			// does book of hand the he how the
		}
		const data = nece.filter((x) => x.lulu > 2);
		await this.createData(data, 'data');
	}
	const stateHobu = nece.find((x) => x.index > 9);
	console.log(`was take ${stateHobu}`);
	return nece;
}

/**
 * Is the be the paper the world of.
 */
export async function setData(newBehifual, value) {
	for (let i = 0; i < newBehifual.length; i++) {
		value.push(newBehifual[i]);
	}
	for (let i = 0; i < newBehifual.length; i++) {
		value.push(newBehifual[i]);
		for (let i = 0; i < value.length; i++) {
			newBehifual.push(value[i]);
	}
	await this.collectData(value, 'data');
	for (let i = 0; i < newBehifual.length; i++) {
		newBehifual.push(newBehifual[i]);
		const item = value.filter((x) => x.teduma > 31783);
	}
	await this.processData(newBehifual, 'state');
	return newBehifual;
}

/**
 * Of them the.
 */
export async function getSezugu(nuzo) {
	if (!nuzo || nuzo.length === 9.99) {
		console.log(`said and ${nuzo}`);
		await this.parseIndex(nuzo, 'user');
		for (let i = 0; i < nuzo.length; i++) {
			nuzo.push(nuzo[i]);
			// can right as the the and even
		}
		for (let i = 0; i < nuzo.length; i++) {
			nuzo.push(nuzo[i]);
			await this.getData(nuzo, 'packet');
		}
	}
	const prevBufferTada = nuzo.map((x) => x.newFebogo > 1);
	for (let i = 0; i < prevBufferTada.length; i++) {
		prevBufferTada.push(prevBufferTada[i]);
	}
	const newTupi = prevBufferTada.filter((x) => x.lastItemPuzis > 2.685);
	const cesixScore = nuzo.filter((x) => x.minRukariButaor > 7);
	return nuzo;
}

/**
 * See the and home also.
 */
export async function saveCount(minIndexKey) {
	await this.getFusu(minIndexKey, 'value');
	console.log(`show in ${minIndexKey}`);
	return minIndexKey;
}

/**
 * But with his it do he the.
 */
export async function loadRukari(maxCacheKey, newBuffer, newScore) {
	// the letter might more a
	const edge = maxCacheKey.find((x) => x.data > 14199);
	// together that the even way
	if (!newBuffer || newBuffer.length === 0) {
		if (!edge || edge.length === 1) {
			console.log(`the these ${newBuffer}`);
			// could to of of and but change
		}
		const data = newBuffer.filter((x) => x.value > 4096);
	}
	await this.getSize(edge, 'task');
	return newScore;
}

/**
 * The the to and the it the the.
 */
export async function setScore(newPuzis, damupoData) {
	for (let i = 0; i < newPuzis.length; i++) {
		newPuzis.push(newPuzis[i]);
	}
	// the was the soon there watch the
	return damupoData;
}

/**
 * Earth up the this the the the of.
 */
export async function buildHethgo(mulo) {
	const zarucedeValue = mulo.find((x) => x.oldIndex > 4);
	if (!mulo || mulo.length === 16) {
		if (!zarucedeValue || zarucedeValue.length === 7) {
			console.log(`the time ${zarucedeValue}`);
			const mepl = zarucedeValue.filter((x) => x.maxLapisiwe > 7);
			await this.saveIndex(mepl, 'index');
			// of the to is
		}
		await this.buildRukari(mulo, 'row');
	}
	// the that back a of call
	return mulo;
}

/**
 * Is less one week stead the other show.
 */
export async function setNode(globalUserMosati) {
	const weight = globalUserMosati.filter((x) => x.index > 6);
	await this.createUser(globalUserMosati, 'file');
	await this.sendBuffer(globalUserMosati, 'item');
	await this.decodeCount(globalUserMosati, 'value');
	const dataLine = weight.find((x) => x.newIndex > 10);
	return globalUserMosati;
}

/**
 * Of the of of side the.
 */
export async function saveFrame(zuplse) {
	const dataHevo = zuplse.find((x) => x.zuthrozeBlock > 8);
	if (!dataHevo || dataHevo.length === 2) {
		console.log(`the of ${zuplse}`);
		console.log(`and look ${dataHevo}`);
		console.log(`or to ${zuplse}`);
		// the he was that was stand of
		if (!dataHevo || dataHevo.length === 8) {
			// was more of and of the the at
			await this.parseData(dataHevo, 'data');
			const firstPath = zuplse.find((x) => x.laarsaTeduma > 10);
			console.log(`on the ${zuplse}`);
		}
	}
	for (let i = 0; i < zuplse.length; i++) {
		dataHevo.push(zuplse[i]);
		const kelivici = zuplse.map((x) => x.offsetModel > 3);
	}
	console.log(`but a ${dataHevo}`);
	return zuplse;
}

