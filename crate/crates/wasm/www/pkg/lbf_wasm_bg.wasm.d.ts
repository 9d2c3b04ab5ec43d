/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_clip_free: (a: number, b: number) => void;
export const __wbg_curvefit_free: (a: number, b: number) => void;
export const __wbg_encodestats_free: (a: number, b: number) => void;
export const __wbg_get_encodestats_entropy_bpp: (a: number) => number;
export const __wbg_get_encodestats_keypixel_fraction: (a: number) => number;
export const __wbg_get_encodestats_psnr_db: (a: number) => number;
export const __wbg_set_encodestats_entropy_bpp: (a: number, b: number) => void;
export const __wbg_set_encodestats_keypixel_fraction: (a: number, b: number) => void;
export const __wbg_set_encodestats_psnr_db: (a: number, b: number) => void;
export const clip_encode: (a: number, b: number, c: number) => [number, number, number];
export const clip_frame_count: (a: number) => number;
export const clip_frame_rgba: (a: number, b: number, c: number) => [number, number, number, number];
export const clip_height: (a: number) => number;
export const clip_new: (a: number, b: number, c: number, d: number, e: bigint) => [number, number, number];
export const clip_pixel_trajectory: (a: number, b: number, c: number) => [number, number];
export const clip_sweep: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const clip_width: (a: number) => number;
export const curvefit_decoded: (a: number) => [number, number];
export const curvefit_keypixels: (a: number) => [number, number];
export const curvefit_max_segment_mse: (a: number) => number;
export const fit_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_start: () => void;
