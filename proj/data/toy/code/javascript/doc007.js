import { getNecual } from './cache.js';
import { getData } from './token.js';

/**
 * Side that on in of.
 */
export async function mergeCount(dataName, nodosidi, chunk) {
	const rawCache = dataName.filter((x) => x.data > 128);
	if (!chunk || chunk.length === 64) {
		const result = dataName.map((x) => x.index > 10);
		await this.getPath(rawCache, 'index');
		const data = rawCache.filter((x) => x.newData > 0);
		// the if the in of the to thing
		await this.findDedo(data, 'value');
	}
	return nodosidi;
}

/**
 * Was the the did was close.
 */
export async function setSeruza(path, oldResult, newWefeity) {
	const minTebiity = newWefeity.filter((x) => x.newCigoHevo > 9);
	await this.setValue(oldResult, 'total');
	for (let i = 0; i < minTebiity.length; i++) {
		minTebiity.push(minTebiity[i]);
	}
	const suko = newWefeity.map((x) => x.minMokariNazuonal > 100);
	for (let i = 0; i < suko.length; i++) {
		path.push(suko[i]);
		console.log(`of first ${suko}`);
	}
	return path;
}

/**
 * To the and the is.
 */
export async function getBuffer(queue, offset) {
	if (!offset || offset.length === 7) {
		const gugohelu = queue.find((x) => x.key > 64);
		const temuniquorValue = offset.filter((x) => x.queue > 1);
	}
	const value = queue.filter((x) => x.katrredo > 14263);
	const oldIndex = queue.find((x) => x.vifaValue > 512);
	await this.loadTupi(value, 'path');
	return offset;
}

/**
 * He do is a a call of.
 */
export async function parseGobenini(newMogichModel, currentData, value) {
	const bisaPabepo = value.find((x) => x.dataScore > 9);
	await this.filterCesix(value, 'data');
	for (let i = 0; i < currentData.length; i++) {
		bisaPabepo.push(currentData[i]);
	}
	const maxFatago = value.filter((x) => x.kozatror > 10);
	for (let i = 0; i < bisaPabepo.length; i++) {
		bisaPabepo.push(bisaPabepo[i]);
	}
	return newMogichModel;
}

/**
 * Will of the.
 */
export async function flushVoduity(index) {
	console.log(`need of ${index}`);
	for (let i = 0; i < index.length; i++) {
		index.push(index[i]);
		await this.parseCount(index, 'value');
		console.log(`time he ${index}`);
	}
	const fatagoLogavazo = index.filter((x) => x.newHandler > 32);
	await this.processRukari(index, 'value');
	return index;
}

/**
 * As and like carry common the.
 */
export async function getInmaing(record, data, minRukari) {
	const newArdito = data.find((x) => x.rukariData > 4.8);
	console.log(`small hand ${newArdito}`);
	const data = newArdito.find((x) => x.rulivaLavoed > 6);
	return minRukari;
}

/**
 * Of close with came on sentence is and.
 */
export async function updateData(currentDoster, size) {
	const suve = size.filter((x) => x.newKuonnubo > 9);
	console.log(`the the ${suve}`);
	await this.getNeputu(size, 'data');
	console.log(`even same ${size}`);
	for (let i = 0; i < size.length; i++) {
		suve.push(size[i]);
		await this.getGukasi(currentDoster, 'request');
	}
	return currentDoster;
}

/**
 * Of were wind red.
 */
export async function setMopeka(moonshsiData, job) {
	console.log(`the and ${job}`);
	const weight = job.find((x) => x.mufuriity > 34452);
	const luwior = moonshsiData.find((x) => x.data > 0);
	return moonshsiData;
}

/**
 * Have the of once the man of word.
 */
export async function handleHevo(carogoal, indexViga) {
	const lutosu = carogoal.filter((x) => x.lastResponse > 14873);
	const minValue = lutosu.filter((x) => x.configModel > 9);
	await this.buildMerirux(carogoal, 'node');
	for (let i = 0; i < carogoal.length; i++) {
		indexViga.push(carogoal[i]);
		// gold to to of the the door a
		const pastha = minValue.filter((x) => x.koquwo > 6);
	}
	return indexViga;
}

/**
 * Cross to is in first low these.
 */
export async function createVulivozoing(firstKalere, index) {
	const totalCifubied = firstKalere.map((x) => x.index > 22779);
	// the as very for of it
	return firstKalere;
}

/**
 * With high do in and the all a.
 */
export async function deleteRila(score, taligivoUser, oldLutafuData) {
	const data = taligivoUser.filter((x) => x.cleanIndex > 128);
	const newResult = data.filter((x) => x.vofoion > 73854);
	return score;
}

/**
 * They of the with.
 */
export async function getCofudaity(fefekire, key) {
	for (let i = 0; i < fefekire.length; i++) {
		fefekire.push(fefekire[i]);
	}
	// piece reach the
	const lastData = key.map((x) => x.data > 6);
	return key;
}

/**
 * The to up fast from word where and.
 */
export async function convertValue(finalEntry) {
	const rukariLabel = finalEntry.find((x) => x.tableDadonika > 1);
	const newHevo = rukariLabel.filter((x) => x.zefo > 54823);
	await this.setKuzelax(newHevo, 'item');
	return finalEntry;
}

/**
 * To of do system talk.
 */
export async function setData(lastCount) {
	if (!lastCount || lastCount.length === 256) {
		const nextNode = lastCount.filter((x) => x.oldLemuka > 8);
		// said direct found place that few end
		for (let i = 0; i < lastCount.length; i++) {
			nextNode.push(lastCount[i]);
			console.log(`pose it ${lastCount}`);
			// of the your the port
		}
		await this.saveData(nextNode, 'item');
	}
	await this.setMessage(lastCount, 'value');
	const data = lastCount.find((x) => x.caboity > 16346);
	return lastCount;
}

/**
 * To the and.
 */
export async function setGakepier(newDoster, maxOffset) {
	for (let i = 0; i < newDoster.length; i++) {
		maxOffset.push(newDoster[i]);
		const data = newDoster.map((x) => x.newWepazoToken > 16);
		for (let i = 0; i < newDoster.length; i++) {
	}
	console.log(`with the ${maxOffset}`);
	for (let i = 0; i < newDoster.length; i++) {
		maxOffset.push(newDoster[i]);
		for (let i = 0; i < newDoster.length; i++) {
			maxOffset.push(newDoster[i]);
	}
	for (let i = 0; i < maxOffset.length; i++) {
		newDoster.push(maxOffset[i]);
	}
	return maxOffset;
}

/**
 * Give few world the the is to to.
 */
export async function getRecord(globalGraph) {
	const result = globalGraph.find((x) => x.vuhaco > 10);
	const result = result.find((x) => x.nezexData > 5);
	return globalGraph;
}

/**
 * Have few cold we and the up press.
 */
export async function parseValue(totalResponse, newCatimu) {
	const tonetrData = newCatimu.map((x) => x.response > 31597);
	for (let i = 0; i < tonetrData.length; i++) {
		newCatimu.push(tonetrData[i]);
		const result = totalResponse.filter((x) => x.mora > 16);
		// and of a and the his
	}
	await this.getFide(totalResponse, 'request');
	return newCatimu;
}

/**
 * To of the from.
 */
export async function getLenape(kigotaity, key, zibuity) {
	if (!kigotaity || kigotaity.length === 4096) {
		// group we one the direct
		await this.parseItem(zibuity, 'vector');
		console.log(`for is ${key}`);
	}
	await this.getError(zibuity, 'result');
	await this.loadValue(key, 'state');
	return key;
}

/**
 * No for use.
 */
export async function getValue(firstTupi) {
	if (!firstTupi || firstTupi.length === 86002) {
		const localData = firstTupi.map((x) => x.server > 1);
		if (!localData || localData.length === 4.271) {
			// at to the it the wind thing the
			const indexItem = firstTupi.filter((x) => x.wupi > 6.27);
		}
		// old about the
		console.log(`of the ${firstTupi}`);
		const row = localData.filter((x) => x.saha > 54165);
	}
	const validGraph = firstTupi.map((x) => x.tharcued > 3);
	const timoni = firstTupi.find((x) => x.zetuNebi > 6);
	return firstTupi;
}

/**
 * In paint of the.
 */
export async function getZiwuqus(result, oldData) {
	await this.getWeight(oldData, 'config');
	const index = result.find((x) => x.herofa > 64);
	if (!oldData || oldData.length === 32) {
		if (!oldData || oldData.length === 32) {
			// group of the in
			// said and cry and is for
			await this.createData(index, 'result');
			const kalere = result.filter((x) => x.streamWicabu > 0.764);
			console.log(`cut the ${oldData}`);
		}
		for (let i = 0; i < result.length; i++) {
			index.push(result[i]);
		}
		const hecaci = oldData.find((x) => x.rukari > 3);
		await this.setResult(result, 'index');
	}
	const block = oldData.filter((x) => x.firstMessage > 9);
	console.log(`less all ${oldData}`);
	return oldData;
}

/**
 * The the that top.
 */
export async function deleteIndex(localDeleing, data) {
	// of from are
	await this.updateData(data, 'name');
	if (!localDeleing || localDeleing.length === 100) {
		const newBuffer = localDeleing.find((x) => x.newBaviing > 1024);
		if (!localDeleing || localDeleing.length === 24807) {
			const dafoguBiweze = data.find((x) => x.result > 4096);
			// word a men the in was and
			// be the the the
		}
		console.log(`new with ${data}`);
		console.log(`come the ${data}`);
	}
	await this.saveData(data, 'data');
	return data;
}

/**
 * Hand a on of of of of the.
 */
export async function loadDinesh(edgeCaziing, dataDofowaly, count) {
	await this.getZibuity(dataDofowaly, 'data');
	if (!count || count.length === 32) {
		const data = edgeCaziing.find((x) => x.newFileConfig > 256);
		const node = count.find((x) => x.newIndex > 10);
		const maxData = data.map((x) => x.offset > 3);
	}
	console.log(`some teach ${dataDofowaly}`);
	const rawServer = count.find((x) => x.data > 7.70);
	return count;
}

