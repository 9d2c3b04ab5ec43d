/* @ts-self-types="./lbf_wasm.d.ts" */

/**
 * A synthetic luma clip plus its most recent encoding.
 */
export class Clip {
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        ClipFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_clip_free(ptr, 0);
    }
    /**
     * @param {number} lambda
     * @param {number} delta
     * @returns {EncodeStats}
     */
    encode(lambda, delta) {
        const ret = wasm.clip_encode(this.__wbg_ptr, lambda, delta);
        if (ret[2]) {
            throw takeFromExternrefTable0(ret[1]);
        }
        return EncodeStats.__wrap(ret[0]);
    }
    /**
     * @returns {number}
     */
    get frame_count() {
        const ret = wasm.clip_frame_count(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * RGBA pixels of one frame, ready for `ImageData`.
     * @param {View} view
     * @param {number} index
     * @returns {Uint8Array}
     */
    frame_rgba(view, index) {
        const ret = wasm.clip_frame_rgba(this.__wbg_ptr, view, index);
        if (ret[3]) {
            throw takeFromExternrefTable0(ret[2]);
        }
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * @returns {number}
     */
    get height() {
        const ret = wasm.clip_height(this.__wbg_ptr);
        return ret >>> 0;
    }
    /**
     * @param {number} width
     * @param {number} height
     * @param {number} frames
     * @param {number} noise
     * @param {bigint} seed
     */
    constructor(width, height, frames, noise, seed) {
        const ret = wasm.clip_new(width, height, frames, noise, seed);
        if (ret[2]) {
            throw takeFromExternrefTable0(ret[1]);
        }
        this.__wbg_ptr = ret[0];
        ClipFinalization.register(this, this.__wbg_ptr, this);
        return this;
    }
    /**
     * Grey levels of pixel `(x, y)` across all frames.
     * @param {number} x
     * @param {number} y
     * @returns {Uint8Array}
     */
    pixel_trajectory(x, y) {
        const ret = wasm.clip_pixel_trajectory(this.__wbg_ptr, x, y);
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * Sweep CSV with the timing column left as `na`.
     * @param {Float64Array} lambdas
     * @param {number} delta
     * @returns {string}
     */
    sweep(lambdas, delta) {
        let deferred3_0;
        let deferred3_1;
        try {
            const ptr0 = passArrayF64ToWasm0(lambdas, wasm.__wbindgen_malloc);
            const len0 = WASM_VECTOR_LEN;
            const ret = wasm.clip_sweep(this.__wbg_ptr, ptr0, len0, delta);
            var ptr2 = ret[0];
            var len2 = ret[1];
            if (ret[3]) {
                ptr2 = 0; len2 = 0;
                throw takeFromExternrefTable0(ret[2]);
            }
            deferred3_0 = ptr2;
            deferred3_1 = len2;
            return getStringFromWasm0(ptr2, len2);
        } finally {
            wasm.__wbindgen_free(deferred3_0, deferred3_1, 1);
        }
    }
    /**
     * @returns {number}
     */
    get width() {
        const ret = wasm.clip_width(this.__wbg_ptr);
        return ret >>> 0;
    }
}
if (Symbol.dispose) Clip.prototype[Symbol.dispose] = Clip.prototype.free;

/**
 * Keypixels of a fitted grey-level curve and its reconstruction.
 */
export class CurveFit {
    static __wrap(ptr) {
        const obj = Object.create(CurveFit.prototype);
        obj.__wbg_ptr = ptr;
        CurveFitFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        CurveFitFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_curvefit_free(ptr, 0);
    }
    /**
     * @returns {Uint8Array}
     */
    get decoded() {
        const ret = wasm.curvefit_decoded(this.__wbg_ptr);
        var v1 = getArrayU8FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 1, 1);
        return v1;
    }
    /**
     * @returns {Uint32Array}
     */
    get keypixels() {
        const ret = wasm.curvefit_keypixels(this.__wbg_ptr);
        var v1 = getArrayU32FromWasm0(ret[0], ret[1]).slice();
        wasm.__wbindgen_free(ret[0], ret[1] * 4, 4);
        return v1;
    }
    /**
     * @returns {number}
     */
    get max_segment_mse() {
        const ret = wasm.curvefit_max_segment_mse(this.__wbg_ptr);
        return ret;
    }
}
if (Symbol.dispose) CurveFit.prototype[Symbol.dispose] = CurveFit.prototype.free;

export class EncodeStats {
    static __wrap(ptr) {
        const obj = Object.create(EncodeStats.prototype);
        obj.__wbg_ptr = ptr;
        EncodeStatsFinalization.register(obj, obj.__wbg_ptr, obj);
        return obj;
    }
    __destroy_into_raw() {
        const ptr = this.__wbg_ptr;
        this.__wbg_ptr = 0;
        EncodeStatsFinalization.unregister(this);
        return ptr;
    }
    free() {
        const ptr = this.__destroy_into_raw();
        wasm.__wbg_encodestats_free(ptr, 0);
    }
    /**
     * @returns {number}
     */
    get entropy_bpp() {
        const ret = wasm.__wbg_get_encodestats_entropy_bpp(this.__wbg_ptr);
        return ret;
    }
    /**
     * @returns {number}
     */
    get keypixel_fraction() {
        const ret = wasm.__wbg_get_encodestats_keypixel_fraction(this.__wbg_ptr);
        return ret;
    }
    /**
     * Infinite for a lossless encode.
     * @returns {number}
     */
    get psnr_db() {
        const ret = wasm.__wbg_get_encodestats_psnr_db(this.__wbg_ptr);
        return ret;
    }
    /**
     * @param {number} arg0
     */
    set entropy_bpp(arg0) {
        wasm.__wbg_set_encodestats_entropy_bpp(this.__wbg_ptr, arg0);
    }
    /**
     * @param {number} arg0
     */
    set keypixel_fraction(arg0) {
        wasm.__wbg_set_encodestats_keypixel_fraction(this.__wbg_ptr, arg0);
    }
    /**
     * Infinite for a lossless encode.
     * @param {number} arg0
     */
    set psnr_db(arg0) {
        wasm.__wbg_set_encodestats_psnr_db(this.__wbg_ptr, arg0);
    }
}
if (Symbol.dispose) EncodeStats.prototype[Symbol.dispose] = EncodeStats.prototype.free;

/**
 * @enum {0 | 1 | 2}
 */
export const View = Object.freeze({
    Original: 0, "0": "Original",
    Decoded: 1, "1": "Decoded",
    Mask: 2, "2": "Mask",
});

/**
 * @param {Uint8Array} values
 * @param {number} lambda
 * @param {number} delta
 * @returns {CurveFit}
 */
export function fit_curve(values, lambda, delta) {
    const ptr0 = passArray8ToWasm0(values, wasm.__wbindgen_malloc);
    const len0 = WASM_VECTOR_LEN;
    const ret = wasm.fit_curve(ptr0, len0, lambda, delta);
    if (ret[2]) {
        throw takeFromExternrefTable0(ret[1]);
    }
    return CurveFit.__wrap(ret[0]);
}
function __wbg_get_imports() {
    const import0 = {
        __proto__: null,
        __wbg_Error_30c8987f7c2ed4e2: function(arg0, arg1) {
            const ret = Error(getStringFromWasm0(arg0, arg1));
            return ret;
        },
        __wbg___wbindgen_throw_41e9ee4f547fc59a: function(arg0, arg1) {
            throw new Error(getStringFromWasm0(arg0, arg1));
        },
        __wbindgen_init_externref_table: function() {
            const table = wasm.__wbindgen_externrefs;
            const offset = table.grow(4);
            table.set(0, undefined);
            table.set(offset + 0, undefined);
            table.set(offset + 1, null);
            table.set(offset + 2, true);
            table.set(offset + 3, false);
        },
    };
    return {
        __proto__: null,
        "./lbf_wasm_bg.js": import0,
    };
}

const ClipFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_clip_free(ptr, 1));
const CurveFitFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_curvefit_free(ptr, 1));
const EncodeStatsFinalization = (typeof FinalizationRegistry === 'undefined')
    ? { register: () => {}, unregister: () => {} }
    : new FinalizationRegistry(ptr => wasm.__wbg_encodestats_free(ptr, 1));

function getArrayU32FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getUint32ArrayMemory0().subarray(ptr / 4, ptr / 4 + len);
}

function getArrayU8FromWasm0(ptr, len) {
    ptr = ptr >>> 0;
    return getUint8ArrayMemory0().subarray(ptr / 1, ptr / 1 + len);
}

let cachedFloat64ArrayMemory0 = null;
function getFloat64ArrayMemory0() {
    if (cachedFloat64ArrayMemory0 === null || cachedFloat64ArrayMemory0.byteLength === 0) {
        cachedFloat64ArrayMemory0 = new Float64Array(wasm.memory.buffer);
    }
    return cachedFloat64ArrayMemory0;
}

function getStringFromWasm0(ptr, len) {
    return decodeText(ptr >>> 0, len);
}

let cachedUint32ArrayMemory0 = null;
function getUint32ArrayMemory0() {
    if (cachedUint32ArrayMemory0 === null || cachedUint32ArrayMemory0.byteLength === 0) {
        cachedUint32ArrayMemory0 = new Uint32Array(wasm.memory.buffer);
    }
    return cachedUint32ArrayMemory0;
}

let cachedUint8ArrayMemory0 = null;
function getUint8ArrayMemory0() {
    if (cachedUint8ArrayMemory0 === null || cachedUint8ArrayMemory0.byteLength === 0) {
        cachedUint8ArrayMemory0 = new Uint8Array(wasm.memory.buffer);
    }
    return cachedUint8ArrayMemory0;
}

function passArray8ToWasm0(arg, malloc) {
    const ptr = malloc(arg.length * 1, 1) >>> 0;
    getUint8ArrayMemory0().set(arg, ptr / 1);
    WASM_VECTOR_LEN = arg.length;
    return ptr;
}

function passArrayF64ToWasm0(arg, malloc) {
    const ptr = malloc(arg.length * 8, 8) >>> 0;
    getFloat64ArrayMemory0().set(arg, ptr / 8);
    WASM_VECTOR_LEN = arg.length;
    return ptr;
}

function takeFromExternrefTable0(idx) {
    const value = wasm.__wbindgen_externrefs.get(idx);
    wasm.__externref_table_dealloc(idx);
    return value;
}

let cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
cachedTextDecoder.decode();
const MAX_SAFARI_DECODE_BYTES = 2146435072;
let numBytesDecoded = 0;
function decodeText(ptr, len) {
    numBytesDecoded += len;
    if (numBytesDecoded >= MAX_SAFARI_DECODE_BYTES) {
        cachedTextDecoder = new TextDecoder('utf-8', { ignoreBOM: true, fatal: true });
        cachedTextDecoder.decode();
        numBytesDecoded = len;
    }
    return cachedTextDecoder.decode(getUint8ArrayMemory0().subarray(ptr, ptr + len));
}

let WASM_VECTOR_LEN = 0;

let wasmModule, wasmInstance, wasm;
function __wbg_finalize_init(instance, module) {
    wasmInstance = instance;
    wasm = instance.exports;
    wasmModule = module;
    cachedFloat64ArrayMemory0 = null;
    cachedUint32ArrayMemory0 = null;
    cachedUint8ArrayMemory0 = null;
    wasm.__wbindgen_start();
    return wasm;
}

async function __wbg_load(module, imports) {
    if (typeof Response === 'function' && module instanceof Response) {
        if (!module.ok) {
            throw new Error(`failed to fetch Wasm: ${module.status} ${module.statusText} fetching '${module.url}'`);
        }

        if (typeof WebAssembly.instantiateStreaming === 'function') {
            try {
                return await WebAssembly.instantiateStreaming(module, imports);
            } catch (e) {
                const validResponse = expectedResponseType(module.type);

                if (validResponse && module.headers.get('Content-Type') !== 'application/wasm') {
                    console.warn("`WebAssembly.instantiateStreaming` failed because your server does not serve Wasm with `application/wasm` MIME type. Falling back to `WebAssembly.instantiate` which is slower. Original error:\n", e);

                } else { throw e; }
            }
        }

        const bytes = await module.arrayBuffer();
        return await WebAssembly.instantiate(bytes, imports);
    } else {
        const instance = await WebAssembly.instantiate(module, imports);

        if (instance instanceof WebAssembly.Instance) {
            return { instance, module };
        } else {
            return instance;
        }
    }

    function expectedResponseType(type) {
        switch (type) {
            case 'basic': case 'cors': case 'default': return true;
        }
        return false;
    }
}

function initSync(module) {
    if (wasm !== undefined) return wasm;


    if (module !== undefined) {
        if (Object.getPrototypeOf(module) === Object.prototype) {
            ({module} = module)
        } else {
            console.warn('using deprecated parameters for `initSync()`; pass a single object instead')
        }
    }

    const imports = __wbg_get_imports();
    if (!(module instanceof WebAssembly.Module)) {
        module = new WebAssembly.Module(module);
    }
    const instance = new WebAssembly.Instance(module, imports);
    return __wbg_finalize_init(instance, module);
}

async function __wbg_init(module_or_path) {
    if (wasm !== undefined) return wasm;


    if (module_or_path !== undefined) {
        if (Object.getPrototypeOf(module_or_path) === Object.prototype) {
            ({module_or_path} = module_or_path)
        } else {
            console.warn('using deprecated parameters for the initialization function; pass a single object instead')
        }
    }

    if (module_or_path === undefined) {
        module_or_path = new URL('lbf_wasm_bg.wasm', import.meta.url);
    }
    const imports = __wbg_get_imports();

    if (typeof module_or_path === 'string' || (typeof Request === 'function' && module_or_path instanceof Request) || (typeof URL === 'function' && module_or_path instanceof URL)) {
        module_or_path = fetch(module_or_path);
    }

    const { instance, module } = await __wbg_load(await module_or_path, imports);

    return __wbg_finalize_init(instance, module);
}

export { initSync, __wbg_init as default };
