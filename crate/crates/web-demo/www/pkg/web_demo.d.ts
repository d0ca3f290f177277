/* tslint:disable */
/* eslint-disable */

/**
 * Criteria report for a spec file, as text or key=value lines.
 */
export function criteria_report(spec: string, machine: boolean): string;

/**
 * A planned path on S^3 between two seeded random points (or a point and
 * its antipode). Returns `steps + 1` points as a flat list of 4-vectors;
 * the rule used is reported by [`planner_rule`].
 */
export function planner_path(seed: bigint, steps: number, antipodal: boolean): Float64Array;

export function planner_rule(seed: bigint, antipodal: boolean): string;

/**
 * Normal form of `element^k` in one of the bundle rings, one line per power.
 */
export function power_table(spec: string, which: string, element: string, k: number): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly criteria_report: (a: number, b: number, c: number) => [number, number, number, number];
    readonly planner_path: (a: bigint, b: number, c: number) => [number, number, number, number];
    readonly planner_rule: (a: bigint, b: number) => [number, number];
    readonly power_table: (a: number, b: number, c: number, d: number, e: number, f: number, g: number) => [number, number, number, number];
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
