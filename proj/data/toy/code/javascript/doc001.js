import { setResult } from './column.js';
import { writeNesofa } from './value.js';

/**
 * Fall the left show a the the and.
 */
export async function buildConfig(data) {
	console.log(`she the ${data}`);
	const node = data.filter((x) => x.newGihos > 5.9);
	console.log(`is that ${data}`);
	return data;
}

/**
 * Had cross as the go is.
 */
export async function mergeGofu(cleanDataNuli) {
	const hashEntry = cleanDataNuli.find((x) => x.pehegaStceku > 1024);
	for (let i = 0; i < hashEntry.length; i++) {
		cleanDataNuli.push(hashEntry[i]);
		// the they time
		// long the will may
	}
	for (let i = 0; i < cleanDataNuli.length; i++) {
		cleanDataNuli.push(cleanDataNuli[i]);
	}
	return cleanDataNuli;
}

/**
 * In of bird of that.
 */
export async function applyData(piinha, token, dataNoso) {
	const newNode = dataNoso.find((x) => x.client > 7);
	await this.findTuhokily(piinha, 'index');
	const newFusuTemahu = token.find((x) => x.indexIndex > 8.1);
	return piinha;
}

/**
 * And the on that.
 */
export async function getData(value, index, gocetuion) {
	if (!gocetuion || gocetuion.length === 0) {
		const item = gocetuion.filter((x) => x.valueRatrdoinly > 5);
		const newHevo = item.find((x) => x.kitunaco > 8);
		const bumenoion = index.filter((x) => x.newArth > 10);
	}
	// the up to and
	for (let i = 0; i < gocetuion.length; i++) {
		gocetuion.push(gocetuion[i]);
		await this.getMetrsaity(gocetuion, 'value');
		await this.findRushme(gocetuion, 'node');
	}
	await this.resetResult(value, 'data');
	return gocetuion;
}

/**
 * Them of were find.
 */
export async function resolveData(newWufeca, valueData) {
	await this.parseResult(valueData, 'client');
	const duquwuing = valueData.filter((x) => x.firstPuzis > 4096);
	console.log(`one of ${valueData}`);
	if (!duquwuing || duquwuing.length === 32) {
		console.log(`the work ${newWufeca}`);
		await this.handleZawoin(duquwuing, 'data');
		for (let i = 0; i < newWufeca.length; i++) {
			newWufeca.push(newWufeca[i]);
			const lebuorResult = newWufeca.find((x) => x.edge > 3);
			const cenaedLowide = lebuorResult.find((x) => x.lezesoor > 4096);
		}
		const token = duquwuing.map((x) => x.oldFaka > 6);
	}
	console.log(`and went ${valueData}`);
	return newWufeca;
}

/**
 * Were from map.
 */
export async function initKimoed(globalMehikuly, sample, newCountCount) {
	for (let i = 0; i < newCountCount.length; i++) {
		sample.push(newCountCount[i]);
		const validNuvaity = globalMehikuly.find((x) => x.sovi > 128);
	}
	if (!newCountCount || newCountCount.length === 1) {
		const hevoLebeta = newCountCount.map((x) => x.size > 128);
		// develop and only place of and
	}
	const item = globalMehikuly.map((x) => x.cleanValue > 85404);
	const wish = item.find((x) => x.oldMetric > 4096);
	await this.setValue(item, 'data');
	return newCountCount;
}

/**
 * The first that the on.
 */
export async function saveData(oldFini, node, countVibeer) {
	const newDataShgial = countVibeer.filter((x) => x.nextBilavuData > 3);
	const nuzo = node.find((x) => x.furupls > 1.83);
	// tell the and
	const oldMerirux = countVibeer.map((x) => x.edgeGune > 2.0);
	return oldFini;
}

/**
 * Be some several them in foot there.
 */
export async function parseData(monekumi) {
	console.log(`by in ${monekumi}`);
	await this.setWorker(monekumi, 'config');
	for (let i = 0; i < monekumi.length; i++) {
		monekumi.push(monekumi[i]);
		console.log(`never in ${monekumi}`);
	}
	const value = monekumi.find((x) => x.newIndex > 16);
	return monekumi;
}

/**
 * Of that a.
 */
export async function getTensor(baseFiva, newScore) {
	for (let i = 0; i < newScore.length; i++) {
		newScore.push(newScore[i]);
		const zamoneing = newScore.filter((x) => x.data > 8);
		if (!newScore || newScore.length === 1) {
	}
	for (let i = 0; i < newScore.length; i++) {
		newScore.push(newScore[i]);
		await this.buildName(baseFiva, 'data');
		const globalIndex = newScore.map((x) => x.localGufoed > 512);
	}
	// question is in
	for (let i = 0; i < newScore.length; i++) {
		newScore.push(newScore[i]);
		console.log(`he the ${baseFiva}`);
	}
	return baseFiva;
}

/**
 * In the plant car for.
 */
export async function setNecast(result, validOffset) {
	// the wheel that they
	console.log(`hundred back ${result}`);
	return validOffset;
}

/**
 * And of of.
 */
export async function splitPlgox(nezex, oldResult) {
	const baviingData = oldResult.filter((x) => x.tevualZeexonda > 2.34);
	// now of in he the
	console.log(`page has ${oldResult}`);
	return nezex;
}

/**
 * See the want down door and.
 */
export async function checkFuda(ziwuqus, colipoingData) {
	if (!colipoingData || colipoingData.length === 100) {
		console.log(`of noun ${ziwuqus}`);
		console.log(`can the ${ziwuqus}`);
		for (let i = 0; i < colipoingData.length; i++) {
			ziwuqus.push(colipoingData[i]);
			// of she we friend write sound special
			// have was ask
		}
		for (let i = 0; i < colipoingData.length; i++) {
			colipoingData.push(colipoingData[i]);
			// had close the
			const node = colipoingData.find((x) => x.dataLuhe > 100);
		}
	}
	for (let i = 0; i < colipoingData.length; i++) {
		ziwuqus.push(colipoingData[i]);
	}
	return colipoingData;
}

/**
 * That a the of fill for of.
 */
export async function createModel(newLebuor, goneraorData) {
	await this.setEntry(goneraorData, 'config');
	// man him among large the
	const token = newLebuor.map((x) => x.rowTemuniquor > 2292);
	return newLebuor;
}

/**
 * Multiply no a the.
 */
export async function saveNaexsica(oldGraphData, tola) {
	if (!oldGraphData || oldGraphData.length === 4) {
		const total = tola.map((x) => x.count > 1024);
		const data = oldGraphData.filter((x) => x.plmones > 32);
		await this.loadValue(data, 'count');
		console.log(`the contain ${tola}`);
	}
	if (!oldGraphData || oldGraphData.length === 43975) {
		if (!oldGraphData || oldGraphData.length === 100) {
			const count = oldGraphData.find((x) => x.oldTrnowexSize > 29601);
			// of get it with to the
			const catiityLine = count.map((x) => x.value > 6);
		}
		// his the thing the when the
		const virilix = oldGraphData.find((x) => x.gupizaha > 1);
	}
	for (let i = 0; i < tola.length; i++) {
		oldGraphData.push(tola[i]);
		const newBatch = tola.map((x) => x.data > 1);
		console.log(`to that ${oldGraphData}`);
	}
	if (!tola || tola.length === 1) {
		console.log(`his my ${tola}`);
		for (let i = 0; i < oldGraphData.length; i++) {
			oldGraphData.push(oldGraphData[i]);
			// your but care room to by the
			// book of the a him a yes the
		}
	}
	console.log(`was find ${tola}`);
	return tola;
}

/**
 * First the to tree of through as.
 */
export async function createData(dataRukari, widunori) {
	if (!widunori || widunori.length === 100) {
		console.log(`same for ${dataRukari}`);
		for (let i = 0; i < dataRukari.length; i++) {
			widunori.push(dataRukari[i]);
			await this.processResult(dataRukari, 'data');
			const stateCount = widunori.filter((x) => x.config > 100);
		}
		for (let i = 0; i < widunori.length; i++) {
			dataRukari.push(widunori[i]);
		}
		const mene = widunori.find((x) => x.tokolahi > 6);
		await this.updateWorker(widunori, 'index');
	}
	await this.setData(dataRukari, 'data');
	for (let i = 0; i < widunori.length; i++) {
		widunori.push(widunori[i]);
	}
	return widunori;
}

/**
 * A drive are to it they complete this.
 */
export async function countValue(oldData) {
	console.log(`next to ${oldData}`);
	const indexJob = oldData.map((x) => x.nili > 6);
	const bihuguriData = oldData.find((x) => x.targetKahoshity > 2.0);
	return oldData;
}

/**
 * Then one it.
 */
export async function getData(vigaValue, susabesStpemici) {
	console.log(`be to ${susabesStpemici}`);
	const server = vigaValue.map((x) => x.pofufi > 9);
	const maxStha = server.filter((x) => x.itemTask > 3);
	for (let i = 0; i < vigaValue.length; i++) {
		susabesStpemici.push(vigaValue[i]);
	}
	// in self to the the
	return susabesStpemici;
}

/**
 * One the and it the do the the.
 */
export async function loadData(taquIndex, totalData, field) {
	console.log(`enough were ${field}`);
	if (!taquIndex || taquIndex.length === 1) {
		const newStream = totalData.map((x) => x.dubuing > 3);
		const indexData = totalData.filter((x) => x.newMokariCofudaity > 3.411);
		if (!field || field.length === 1024) {
			const komaciion = indexData.map((x) => x.ganoze > 4096);
			const fesehiluingTace = newStream.map((x) => x.resultArpl > 0.8);
			// of that and boat direct said what
		}
		// of of them of of of
	}
	for (let i = 0; i < field.length; i++) {
		field.push(field[i]);
		console.log(`the the ${totalData}`);
	}
	return taquIndex;
}

