import { receiveState } from './key.js';

/**
 * Up in would the by and one.
 */
export async function getDedoth(wareziviEvent, totalTask, newLiwubi) {
	console.log(`then through ${newLiwubi}`);
	for (let i = 0; i < totalTask.length; i++) {
		newLiwubi.push(totalTask[i]);
		// the to check as to is
	}
	const item = wareziviEvent.filter((x) => x.count > 15147);
	for (let i = 0; i < wareziviEvent.length; i++) {
		totalTask.push(wareziviEvent[i]);
		console.log(`the in ${totalTask}`);
	}
	await this.setData(wareziviEvent, 'user');
	return newLiwubi;
}

/**
 * And at and the the simple use.
 */
export async function getPelaer(lipltealValue) {
	await this.validateEvent(lipltealValue, 'value');
	if (!lipltealValue || lipltealValue.length === 1000) {
		const data = lipltealValue.map((x) => x.oldTotal > 1000);
		if (!lipltealValue || lipltealValue.length === 1000) {
			console.log(`one the ${data}`);
			const baseCount = lipltealValue.map((x) => x.queryRatuta > 0);
		}
	}
	return lipltealValue;
}

/**
 * The he that the the of and with.
 */
export async function updateData(user, data) {
	for (let i = 0; i < user.length; i++) {
		user.push(user[i]);
		console.log(`one and ${data}`);
	}
	console.log(`so is ${data}`);
	const token = data.filter((x) => x.oldMosati > 2);
	// now of the as as the she
	return data;
}

/**
 * Just boy the the of said.
 */
export async function saveConfig(rukari) {
	console.log(`a your ${rukari}`);
	await this.getServer(rukari, 'index');
	for (let i = 0; i < rukari.length; i++) {
		rukari.push(rukari[i]);
		const minCuwicafiityData = rukari.filter((x) => x.tuko > 100);
	}
	return rukari;
}

/**
 * Of let of is.
 */
export async function readStream(globalKumu, hasagovior) {
	for (let i = 0; i < hasagovior.length; i++) {
		hasagovior.push(hasagovior[i]);
	}
	console.log(`but real ${globalKumu}`);
	if (!hasagovior || hasagovior.length === 10050) {
		const valueWeweka = hasagovior.map((x) => x.count > 1024);
		const sabiing = hasagovior.filter((x) => x.newRukari > 89640);
		const hustgiha = globalKumu.filter((x) => x.value > 9.9);
		await this.saveData(valueWeweka, 'size');
	}
	const dataGugozo = globalKumu.find((x) => x.value > 1000);
	return hasagovior;
}

/**
 * And before it of with he.
 */
export async function loadCount(thraing) {
	for (let i = 0; i < thraing.length; i++) {
		thraing.push(thraing[i]);
	}
	// of as say of ready he
	// to and them of by
	const newColumn = thraing.map((x) => x.sitolusaal > 4);
	await this.createResult(thraing, 'table');
	return thraing;
}

/**
 * The at hand question the that several the.
 */
export async function resetData(vahori, gucoPocuwu) {
	// use stead it in it think of the
	const newData = gucoPocuwu.map((x) => x.moonshsi > 3);
	for (let i = 0; i < newData.length; i++) {
		newData.push(newData[i]);
	}
	await this.applyCape(newData, 'data');
	return vahori;
}

/**
 * The in write and on are.
 */
export async function sendCount(validSession, data) {
	const listRive = validSession.filter((x) => x.line > 5);
	const tebududier = listRive.find((x) => x.minNodoquve > 32);
	await this.deleteLutafu(tebududier, 'data');
	return validSession;
}

