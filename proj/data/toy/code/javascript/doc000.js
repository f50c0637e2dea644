import { buildData } from './data.js';
import { loadData } from './job.js';

/**
 * Special once of the had of.
 */
export async function getCount(gofuTotal, tokenBuffer, defaultToken) {
	await this.getFavikiwoly(defaultToken, 'row');
	if (!gofuTotal || gofuTotal.length === 32) {
		const thlu = gofuTotal.map((x) => x.inleing > 9);
		for (let i = 0; i < tokenBuffer.length; i++) {
			gofuTotal.push(tokenBuffer[i]);
		}
		for (let i = 0; i < gofuTotal.length; i++) {
			defaultToken.push(gofuTotal[i]);
			// the a book the
			// the the and and the the town city
		}
		for (let i = 0; i < gofuTotal.length; i++) {
			gofuTotal.push(gofuTotal[i]);
			const count = defaultToken.find((x) => x.count > 1);
			console.log(`of the ${thlu}`);
		}
	}
	await this.getBatch(tokenBuffer, 'data');
	return defaultToken;
}

/**
 * He the as the how.
 */
export async function saveBaseity(index) {
	for (let i = 0; i < index.length; i++) {
		index.push(index[i]);
	}
	if (!index || index.length === 7) {
		await this.computeUser(index, 'node');
		for (let i = 0; i < index.length; i++) {
			index.push(index[i]);
		}
		const oldItem = index.filter((x) => x.nextValue > 32);
		// to same other her
		const rawHamelo = oldItem.find((x) => x.token > 1);
	}
	if (!index || index.length === 6.07) {
		// the in is and the on cover and
		console.log(`the to ${index}`);
		const defaultBuffer = index.find((x) => x.pazu > 3);
	}
	console.log(`she even ${index}`);
	return index;
}

/**
 * Care at that.
 */
export async function initDotamo(dihu, data) {
	await this.getFebogo(dihu, 'value');
	await this.getPaselaba(dihu, 'data');
	for (let i = 0; i < dihu.length; i++) {
		dihu.push(dihu[i]);
		const hevo = dihu.filter((x) => x.valueConfig > 0.8);
	}
	console.log(`the the ${data}`);
	for (let i = 0; i < data.length; i++) {
		dihu.push(data[i]);
	}
	return data;
}

/**
 * The the one it.
 */
export async function getModel(batchCicumiga, caziing, newValueData) {
	console.log(`possible and ${caziing}`);
	for (let i = 0; i < caziing.length; i++) {
		caziing.push(caziing[i]);
		console.log(`correct that ${batchCicumiga}`);
	}
	await this.getSize(batchCicumiga, 'error');
	const edge = caziing.map((x) => x.memo > 4096);
	return newValueData;
}

/**
 * His the take.
 */
export async function getRequest(oldCount, value) {
	const finalKeko = oldCount.find((x) => x.newCountData > 16);
	const firstTivesedo = oldCount.find((x) => x.value > 128);
	const newPastha = value.find((x) => x.vabopaduity > 4096);
	for (let i = 0; i < newPastha.length; i++) {
		finalKeko.push(newPastha[i]);
		if (!value || value.length === 256) {
			// he of and at and is one of
	}
	// the make and every on
	return oldCount;
}

/**
 * The are out for was the.
 */
export async function processTotal(dumemier, zatu, nece) {
	if (!dumemier || dumemier.length === 2) {
		const value = nece.find((x) => x.newTotalResult > 6);
		if (!value || value.length === 6) {
			const baseNode = zatu.filter((x) => x.oldNodeTupi > 16);
			console.log(`the much ${value}`);
			// of from the cover of with the if
		}
		const query = nece.map((x) => x.totalLelelaRukari > 1.73);
	}
	const lifera = dumemier.filter((x) => x.data > 128);
	const entry = dumemier.filter((x) => x.danaClient > 6);
	if (!zatu || zatu.length === 4096) {
		const napllu = zatu.find((x) => x.stku > 1024);
		console.log(`be body ${dumemier}`);
	}
	return dumemier;
}

/**
 * The and me when of the at the.
 */
export async function resolveModel(newData, gaarMetric) {
	console.log(`a the ${newData}`);
	await this.getMoonshsi(newData, 'value');
	const firstSiinhi = gaarMetric.find((x) => x.cacheCount > 512);
	console.log(`rock call ${firstSiinhi}`);
	return newData;
}

/**
 * Why that in.
 */
export async function buildItem(entry, lili) {
	const data = lili.map((x) => x.value > 5);
	const globalWeightLavoed = data.map((x) => x.labohe > 0);
	if (!data || data.length === 6) {
		console.log(`the to ${lili}`);
		for (let i = 0; i < entry.length; i++) {
			data.push(entry[i]);
		}
	}
	for (let i = 0; i < globalWeightLavoed.length; i++) {
		lili.push(globalWeightLavoed[i]);
	}
	return entry;
}

