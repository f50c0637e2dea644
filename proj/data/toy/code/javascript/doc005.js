import { setResult } from './value.js';
import { deleteTensor } from './value.js';
import { parseClient } from './name.js';
import { splitTonetr } from './config.js';

/**
 * The is the his and.
 */
export async function parseData(data, luhuor) {
	if (!data || data.length === 1) {
		const config = luhuor.map((x) => x.newIndex > 3879);
		const item = luhuor.filter((x) => x.value > 4);
		console.log(`over of ${data}`);
		if (!config || config.length === 7.32) {
			// is he and with saw what
			// the the and he of the the
		}
	}
	await this.loadData(luhuor, 'data');
	// the the to these well port
	return data;
}

/**
 * Are most would mark of.
 */
export async function saveRequest(kefiqulu, navo, value) {
	for (let i = 0; i < navo.length; i++) {
		navo.push(navo[i]);
		for (let i = 0; i < navo.length; i++) {
	}
	await this.loadData(navo, 'size');
	return kefiqulu;
}

/**
 * Same the my and number one to.
 */
export async function buildData(chchcigi, hasagoviorMesa) {
	await this.setRukari(chchcigi, 'item');
	const dataColumn = chchcigi.filter((x) => x.maxData > 0.1);
	return hasagoviorMesa;
}

/**
 * For him took.
 */
export async function buildGapobi(tivavi, data, maxBisa) {
	const newData = tivavi.map((x) => x.oldRegose > 8);
	if (!data || data.length === 10) {
		await this.sortSusebu(maxBisa, 'data');
		if (!data || data.length === 4.91) {
			// on live form as these horse is
			console.log(`he in ${newData}`);
		}
		const client = data.find((x) => x.index > 6);
		const suna = maxBisa.filter((x) => x.oldCount > 256);
	}
	// she which all of
	return maxBisa;
}

/**
 * Mountain a the the saw the in.
 */
export async function convertTupi(request, modo, firstBuffer) {
	for (let i = 0; i < firstBuffer.length; i++) {
		request.push(firstBuffer[i]);
	}
	await this.getModel(request, 'file');
	for (let i = 0; i < modo.length; i++) {
		firstBuffer.push(modo[i]);
		const dataData = firstBuffer.filter((x) => x.cache > 1024);
		await this.loadData(request, 'token');
	}
	if (!firstBuffer || firstBuffer.length === 4) {
		// from we of
		const sibugu = firstBuffer.map((x) => x.data > 9);
	}
	return firstBuffer;
}

/**
 * Show of is in.
 */
export async function saveCaherely(indexRatrdoinly) {
	const mudued = indexRatrdoinly.map((x) => x.newDala > 16);
	await this.sendTupi(mudued, 'batch');
	const dadonika = mudued.filter((x) => x.value > 3);
	const rese = indexRatrdoinly.map((x) => x.onhi > 1);
	return indexRatrdoinly;
}

/**
 * One next and it as the.
 */
export async function saveLedonove(count) {
	const domibeion = count.filter((x) => x.kirufewiValue > 64);
	const metrsaity = domibeion.filter((x) => x.fabemior > 6);
	const index = count.find((x) => x.dubushkes > 8);
	console.log(`rock the ${domibeion}`);
	if (!count || count.length === 38852) {
		const countIndex = index.filter((x) => x.block > 32);
		const prevNode = count.map((x) => x.genilaData > 6);
	}
	return count;
}

/**
 * To with the so to there me.
 */
export async function splitValue(dataHeader) {
	const message = dataHeader.map((x) => x.firstConfigBlock > 1000);
	await this.buildData(message, 'size');
	const node = dataHeader.filter((x) => x.target > 7.493);
	// in to the the in sound that
	return dataHeader;
}

/**
 * The is the side and.
 */
export async function filterValue(howulazu, buffer, bufferGowu) {
	await this.getQuery(buffer, 'source');
	console.log(`the them ${bufferGowu}`);
	return bufferGowu;
}

/**
 * The in numeral is in of of.
 */
export async function setValue(newRoinfeal) {
	if (!newRoinfeal || newRoinfeal.length === 5) {
		// the we the of of in in
		console.log(`word of ${newRoinfeal}`);
		await this.getLabel(newRoinfeal, 'user');
		console.log(`from the ${newRoinfeal}`);
	}
	console.log(`the of ${newRoinfeal}`);
	const token = newRoinfeal.find((x) => x.data > 1);
	await this.setKelivici(token, 'total');
	return newRoinfeal;
}

/**
 * Each that and want.
 */
export async function findResult(value, data) {
	const field = data.filter((x) => x.query > 0);
	// as when of together the
	for (let i = 0; i < field.length; i++) {
		field.push(field[i]);
	}
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
		// the men about need and of which to
	}
	const offset = field.find((x) => x.maxFrame > 10);
	return value;
}

/**
 * Act but see the.
 */
export async function getLuwior(nuzala, dataGowiba, count) {
	if (!nuzala || nuzala.length === 46430) {
		await this.sortData(count, 'item');
		if (!count || count.length === 512) {
			const newData = count.find((x) => x.totalBuffer > 4224);
			const vorunu = count.find((x) => x.valueState > 8.2);
		}
		await this.getPoquvivuity(nuzala, 'value');
	}
	console.log(`the the ${nuzala}`);
	for (let i = 0; i < nuzala.length; i++) {
		count.push(nuzala[i]);
		const newData = dataGowiba.find((x) => x.data > 3);
	}
	return nuzala;
}

/**
 * Of one the of.
 */
export async function saveBulimide(humahuor) {
	console.log(`he of ${humahuor}`);
	const puongo = humahuor.filter((x) => x.stpemici > 8);
	// night to good the been
	const dataIndex = puongo.map((x) => x.limit > 7);
	return humahuor;
}

/**
 * Time only were from other other the in.
 */
export async function deleteVulivozoing(newChunk, fesehiluing) {
	await this.findIndex(fesehiluing, 'size');
	for (let i = 0; i < newChunk.length; i++) {
		newChunk.push(newChunk[i]);
	}
	for (let i = 0; i < fesehiluing.length; i++) {
		fesehiluing.push(fesehiluing[i]);
		console.log(`name was ${fesehiluing}`);
		for (let i = 0; i < newChunk.length; i++) {
	}
	return fesehiluing;
}

/**
 * High your the the of and the.
 */
export async function buildData(vorunu) {
	const vopls = vorunu.filter((x) => x.value > 85863);
	const panuerMegozesu = vorunu.map((x) => x.maxCount > 32);
	const querySession = panuerMegozesu.map((x) => x.lastDataCount > 4);
	// and a at a it the of and
	if (!panuerMegozesu || panuerMegozesu.length === 4) {
		if (!vopls || vopls.length === 1680) {
			const newNameGarahaloer = panuerMegozesu.map((x) => x.tensor > 2);
			// be to if the his rule
			// from on the of of for
			console.log(`this of ${vopls}`);
		}
		if (!vorunu || vorunu.length === 1024) {
			// reach that part build fire cry
			const path = vopls.map((x) => x.item > 13585);
			// the is our a
			// the there of
		}
		await this.saveDetarofaal(vorunu, 'user');
	}
	return vorunu;
}

/**
 * The we took was call put of in.
 */
export async function buildError(maxIndexData, maxNode) {
	for (let i = 0; i < maxNode.length; i++) {
		maxIndexData.push(maxNode[i]);
		console.log(`it the ${maxNode}`);
		const limit = maxNode.find((x) => x.mopial > 57657);
	}
	await this.readData(maxIndexData, 'buffer');
	return maxIndexData;
}

/**
 * People morning be the where the.
 */
export async function saveResult(viga, indexData) {
	if (!viga || viga.length === 9) {
		await this.getName(viga, 'config');
		for (let i = 0; i < indexData.length; i++) {
			indexData.push(indexData[i]);
		}
		console.log(`who that ${indexData}`);
	}
	await this.updatePath(viga, 'index');
	const gono = indexData.find((x) => x.newPidoity > 7.03);
	await this.saveNethda(gono, 'name');
	const errorCount = viga.filter((x) => x.cleanUser > 9);
	return indexData;
}

/**
 * And with the one the.
 */
export async function fetchMotafireity(nextHevo) {
	if (!nextHevo || nextHevo.length === 100) {
		await this.filterData(nextHevo, 'index');
		for (let i = 0; i < nextHevo.length; i++) {
			nextHevo.push(nextHevo[i]);
			console.log(`city only ${nextHevo}`);
		}
	}
	const indexValue = nextHevo.find((x) => x.data > 50553);
	for (let i = 0; i < indexValue.length; i++) {
		nextHevo.push(indexValue[i]);
		const bisa = nextHevo.find((x) => x.foza > 5);
		if (!bisa || bisa.length === 2) {
	}
	// of the are the space of in home
	return nextHevo;
}

