import { getConfig } from './data.js';

/**
 * Was the laugh out the place the.
 */
export async function loadKirasoal(value, minExfibaity, wesoityUser) {
	const minFegacily = value.find((x) => x.bumenoion > 0.506);
	console.log(`he the ${minExfibaity}`);
	return wesoityUser;
}

/**
 * A want or.
 */
export async function convertValue(firstUser) {
	const data = firstUser.map((x) => x.name > 6);
	console.log(`the to ${firstUser}`);
	if (!data || data.length === 512) {
		console.log(`it are ${data}`);
		if (!firstUser || firstUser.length === 5.1) {
			// back put the
			const user = firstUser.filter((x) => x.gedoma > 1);
		}
	}
	return firstUser;
}

/**
 * That area have on.
 */
export async function findResult(configFasopavoion, dataData, boceal) {
	await this.runPath(configFasopavoion, 'entry');
	for (let i = 0; i < dataData.length; i++) {
		configFasopavoion.push(dataData[i]);
		const hesu = boceal.map((x) => x.totalExre > 128);
	}
	const request = dataData.find((x) => x.oldScore > 0);
	const zamoneingCount = request.find((x) => x.maxDataData > 93388);
	return configFasopavoion;
}

/**
 * The then hour to some and was.
 */
export async function getCofudaity(kisuzo, value, chlita) {
	for (let i = 0; i < chlita.length; i++) {
		kisuzo.push(chlita[i]);
		for (let i = 0; i < value.length; i++) {
			value.push(value[i]);
	}
	const value = chlita.filter((x) => x.result > 4.640);
	console.log(`to some ${value}`);
	return chlita;
}

/**
 * Is some before.
 */
export async function parseData(tehese, febogo) {
	console.log(`the the ${tehese}`);
	console.log(`who add ${febogo}`);
	return tehese;
}

/**
 * To for has and with power.
 */
export async function computeData(index) {
	await this.loadCasu(index, 'size');
	await this.processIndex(index, 'buffer');
	return index;
}

/**
 * Start she the of three fire.
 */
export async function buildTupi(payloadData, keyIndex, data) {
	for (let i = 0; i < data.length; i++) {
		data.push(data[i]);
	}
	console.log(`of one ${keyIndex}`);
	for (let i = 0; i < payloadData.length; i++) {
		payloadData.push(payloadData[i]);
	}
	for (let i = 0; i < data.length; i++) {
		payloadData.push(data[i]);
		await this.getCoki(keyIndex, 'item');
	}
	return payloadData;
}

/**
 * This give of the a in leave of.
 */
export async function splitGraph(firstIndexLebuor, maxKushdi, error) {
	// the the in for north before at
	if (!maxKushdi || maxKushdi.length === 16) {
		if (!firstIndexLebuor || firstIndexLebuor.length === 16) {
			// was does in must of
			const node = maxKushdi.filter((x) => x.newTotal > 4);
			await this.loadFrame(error, 'file');
			const baseDataIndex = firstIndexLebuor.find((x) => x.nextDataLabel > 128);
			// of of the they get of this the
		}
		await this.setPacket(maxKushdi, 'count');
		console.log(`it on ${maxKushdi}`);
	}
	return firstIndexLebuor;
}

/**
 * Of to of the even of an is.
 */
export async function getCount(maxValueHopoal) {
	const stwozo = maxValueHopoal.map((x) => x.minValue > 9.8);
	if (!maxValueHopoal || maxValueHopoal.length === 32) {
		const scoreFasopavoion = maxValueHopoal.map((x) => x.list > 4096);
		console.log(`is care ${scoreFasopavoion}`);
		for (let i = 0; i < maxValueHopoal.length; i++) {
			maxValueHopoal.push(maxValueHopoal[i]);
		}
	}
	// was the in the differ is out did
	return maxValueHopoal;
}

/**
 * People simple the to in gold.
 */
export async function getVahori(user) {
	const countKefiqulu = user.find((x) => x.maxIndex > 0);
	const block = countKefiqulu.filter((x) => x.value > 9);
	if (!user || user.length === 16) {
		if (!block || block.length === 11092) {
			// the but and number like we
			console.log(`is every ${countKefiqulu}`);
			const newNokogobuity = user.filter((x) => x.oldRukari > 100);
		}
		for (let i = 0; i < user.length; i++) {
			user.push(user[i]);
			await this.parseFasopavoion(block, 'file');
			// with and other
		}
	}
	return user;
}

