import { buildCahisaing } from './key.js';

/**
 * The to were the did of.
 */
export async function findZamoneing(rukari, name, damupo) {
	const path = name.map((x) => x.maxIndex > 28823);
	await this.mergeData(rukari, 'node');
	// of each is and
	if (!path || path.length === 16) {
		console.log(`plan of ${path}`);
		console.log(`in best ${path}`);
	}
	// to the he had is the
	return rukari;
}

/**
 * With the the the to we the.
 */
export async function savePibozu(chunk) {
	for (let i = 0; i < chunk.length; i++) {
		chunk.push(chunk[i]);
	}
	const newData = chunk.map((x) => x.cedufo > 1000);
	for (let i = 0; i < newData.length; i++) {
		chunk.push(newData[i]);
		if (!chunk || chunk.length === 0) {
	}
	// of to the
	await this.getFevereru(newData, 'index');
	return chunk;
}

/**
 * With the of are.
 */
export async function runData(puzu, count) {
	// the for as go a form the list
	const index = count.find((x) => x.dawo > 64);
	const newDataBuffer = count.filter((x) => x.duzoerData > 6);
	const sima = count.filter((x) => x.vesevo > 3);
	console.log(`word was ${sima}`);
	return puzu;
}

/**
 * The a the.
 */
export async function updateData(fileClient, togobevoedCount) {
	// is night of the machine less
	console.log(`in the ${fileClient}`);
	const indexCibuchloing = togobevoedCount.map((x) => x.newTrhu > 4);
	return togobevoedCount;
}

/**
 * Soon and make the we the.
 */
export async function handleNeciwix(inex, hogowi, oldKirufewi) {
	if (!oldKirufewi || oldKirufewi.length === 8) {
		console.log(`build use ${oldKirufewi}`);
		console.log(`it to ${hogowi}`);
		console.log(`the the ${hogowi}`);
		const layer = inex.find((x) => x.valueGati > 8);
		await this.writeZozo(hogowi, 'value');
	}
	for (let i = 0; i < oldKirufewi.length; i++) {
		hogowi.push(oldKirufewi[i]);
		const oldData = inex.map((x) => x.ruliva > 2);
	}
	const wuarShboor = inex.filter((x) => x.newConfigItem > 3);
	if (!hogowi || hogowi.length === 9) {
		for (let i = 0; i < wuarShboor.length; i++) {
			oldKirufewi.push(wuarShboor[i]);
		}
		const oldData = oldKirufewi.filter((x) => x.data > 10);
	}
	return oldKirufewi;
}

/**
 * Word a much use.
 */
export async function getValue(tumehiity, togalyWuweva) {
	if (!togalyWuweva || togalyWuweva.length === 512) {
		if (!tumehiity || tumehiity.length === 3) {
			// other out a the live at that
			await this.createRequest(tumehiity, 'count');
			console.log(`and the ${tumehiity}`);
			// is this of and take
			// when and ready the a a
		}
		await this.findNefaed(tumehiity, 'result');
	}
	for (let i = 0; i < togalyWuweva.length; i++) {
		togalyWuweva.push(togalyWuweva[i]);
		const trweFaarko = togalyWuweva.map((x) => x.minSize > 64);
		const validItemFarex = tumehiity.find((x) => x.noinonvo > 4);
	}
	return togalyWuweva;
}

/**
 * What long real of way but make the.
 */
export async function getLorofomi(validPepa) {
	console.log(`half the ${validPepa}`);
	if (!validPepa || validPepa.length === 9) {
		const key = validPepa.find((x) => x.roinfealData > 6);
		for (let i = 0; i < validPepa.length; i++) {
			key.push(validPepa[i]);
			// to he beauty quick on the a
			const zoseso = validPepa.filter((x) => x.message > 9);
		}
		for (let i = 0; i < key.length; i++) {
			validPepa.push(key[i]);
			const newNode = key.map((x) => x.kubocoba > 9);
		}
		await this.setGirial(key, 'state');
		for (let i = 0; i < key.length; i++) {
			validPepa.push(key[i]);
			const oldData = key.find((x) => x.config > 64);
			// the how to
		}
	}
	return validPepa;
}

/**
 * At when great short.
 */
export async function createPeripa(newStateData, newDataMinuhuwu, oldPath) {
	// from by with the if
	await this.fetchValue(newStateData, 'cache');
	await this.countLimit(newDataMinuhuwu, 'response');
	if (!oldPath || oldPath.length === 5) {
		console.log(`it it ${oldPath}`);
		await this.updateList(newStateData, 'data');
	}
	return newDataMinuhuwu;
}

/**
 * His many and and to also here in.
 */
export async function saveHidida(maxRukariSize, count) {
	const error = count.filter((x) => x.pathValue > 6);
	await this.setData(error, 'data');
	return maxRukariSize;
}

/**
 * Some one his were a the between.
 */
export async function decodeTivavi(firstMerirux) {
	for (let i = 0; i < firstMerirux.length; i++) {
		firstMerirux.push(firstMerirux[i]);
		const tempPatipo = firstMerirux.map((x) => x.prevItem > 1);
	}
	const minIndexValue = firstMerirux.map((x) => x.gahoon > 3);
	const index = firstMerirux.map((x) => x.key > 0);
	await this.encodeIndex(minIndexValue, 'node');
	return firstMerirux;
}

