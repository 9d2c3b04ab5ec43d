/* tslint:disable */
/* eslint-disable */

/**
 * A synthetic luma clip plus its most recent encoding.
 */
export class Clip {
    free(): void;
    [Symbol.dispose](): void;
    encode(lambda: number, delta: number): EncodeStats;
    /**
     * RGBA pixels of one frame, ready for `ImageData`.
     */
    frame_rgba(view: View, index: number): Uint8Array;
    constructor(width: number, height: number, frames: number, noise: number, seed: bigint);
    /**
     * Grey levels of pixel `(x, y)` across all frames.
     */
    pixel_trajectory(x: number, y: number): Uint8Array;
    /**
     * Sweep CSV with the timing column left as `na`.
     */
    sweep(lambdas: Float64Array, delta: number): string;
    readonly frame_count: number;
    readonly height: number;
    readonly width: number;
}

/**
 * Keypixels of a fitted grey-level curve and its reconstruction.
 */
export class CurveFit {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    readonly decoded: Uint8Array;
    readonly keypixels: Uint32Array;
    readonly max_segment_mse: number;
}

export class EncodeStats {
    private constructor();
    free(): void;
    [Symbol.dispose](): void;
    entropy_bpp: number;
    keypixel_fraction: number;
    /**
     * Infinite for a lossless encode.
     */
    psnr_db: number;
}

export enum View {
    Original = 0,
    Decoded = 1,
    Mask = 2,
}

export function fit_curve(values: Uint8Array, lambda: number, delta: number): CurveFit;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_clip_free: (a: number, b: number) => void;
    readonly __wbg_curvefit_free: (a: number, b: number) => void;
    readonly __wbg_encodestats_free: (a: number, b: number) => void;
    readonly __wbg_get_encodestats_entropy_bpp: (a: number) => number;
    readonly __wbg_get_encodestats_keypixel_fraction: (a: number) => number;
    readonly __wbg_get_encodestats_psnr_db: (a: number) => number;
    readonly __wbg_set_encodestats_entropy_bpp: (a: number, b: number) => void;
    readonly __wbg_set_encodestats_keypixel_fraction: (a: number, b: number) => void;
    readonly __wbg_set_encodestats_psnr_db: (a: number, b: number) => void;
    readonly clip_encode: (a: number, b: number, c: number) => [number, number, number];
    readonly clip_frame_count: (a: number) => number;
    readonly clip_frame_rgba: (a: number, b: number, c: number) => [number, number, number, number];
    readonly clip_height: (a: number) => number;
    readonly clip_new: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number];
    readonly clip_pixel_trajectory: (a: number, b: number, c: number) => [number, number];
    readonly clip_sweep: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly clip_width: (a: number) => number;
    readonly curvefit_decoded: (a: number) => [number, number];
    readonly curvefit_keypixels: (a: number) => [number, number];
    readonly curvefit_max_segment_mse: (a: number) => number;
    readonly fit_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
