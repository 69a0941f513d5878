/* tslint:disable */
/* eslint-disable */

/**
 * Applies the spin `[p1,p2]` to a board.
 */
export function apply_spin(board: string, p1: number, p2: number): string;

/**
 * Distance census of a small board.
 */
export function census(m: number, n: number, gens: string): string;

/**
 * Order and index of the subgroup generated by a list of spin types such
 * as `"1x2,2x2"`.
 */
export function generation_report(m: number, n: number, gens: string): string;

/**
 * A uniformly random board as text.
 */
export function random_board(m: number, n: number, seed: number): string;

/**
 * Solves a board with `"greedy"`, `"restricted"` or `"optimal"` and returns
 * `{word, length, method, frames}`, where `frames` lists the board after
 * each spin, starting with the input.
 */
export function solve(board: string, method: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly apply_spin: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly census: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly generation_report: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly random_board: (a: number, b: number, c: number) => [number, number, number, number];
    readonly solve: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
