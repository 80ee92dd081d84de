/** Ready-made starting points.
 *
 * Session presets seed an explorer; the cactus preset feeds the pinch
 * decomposition view directly from a poset and a noncrossing partition.
 */

import type { ClusterJson } from "./api";

export interface SessionPreset {
  kind: "session";
  id: string;
  name: string;
  blurb: string;
  payload: { poset: unknown; seed?: unknown };
}

export interface CactusPreset {
  kind: "cactus";
  id: string;
  name: string;
  blurb: string;
  poset: unknown;
  classes: number[][];
}

export type Preset = SessionPreset | CactusPreset;

const TWO_LIMITS = { kind: "z_zinfty", limits: 2, auto: "canonical" };

/** A staircase of five arcs between the limit lines, closed off by four
 * arc families running into the limits. */
const STAIRCASE_CLUSTER: ClusterJson = {
  poset: TWO_LIMITS,
  arcs: [
    [{ limit: 0, pos: 0 }, { limit: 1, pos: 0 }],
    [{ limit: 0, pos: 1 }, { limit: 1, pos: 0 }],
    [{ limit: 0, pos: 2 }, { limit: 1, pos: -1 }],
    [{ limit: 0, pos: 2 }, { limit: 1, pos: -2 }],
    [{ limit: 0, pos: 2 }, { limit: 1, pos: 0 }],
  ],
  families: [
    {
      fixed: { tail: { limit: 0, dir: "+", start: 3 } },
      moving: { tail: { limit: 1, dir: "-", start: -2 } },
      offset: 0,
    },
    {
      fixed: { tail: { limit: 0, dir: "+", start: 3 } },
      moving: { tail: { limit: 1, dir: "-", start: -3 } },
      offset: 0,
    },
    {
      fixed: { tail: { limit: 0, dir: "-", start: 0 } },
      moving: { tail: { limit: 1, dir: "+", start: 1 } },
      offset: 0,
    },
    {
      fixed: { tail: { limit: 0, dir: "-", start: -1 } },
      moving: { tail: { limit: 1, dir: "+", start: 1 } },
      offset: 0,
    },
  ],
};

export const PRESETS: Preset[] = [
  {
    kind: "session",
    id: "staircase-limits",
    name: "Staircase between two limit lines",
    blurb: "Five labeled arcs plus four arc families; hover shows E/F/G object names.",
    payload: { poset: TWO_LIMITS, seed: STAIRCASE_CLUSTER },
  },
  {
    kind: "session",
    id: "zigzag-weave",
    name: "Zig-zag weave triangulation",
    blurb: "Infinite zig-zag spanning both limit lines; passes the triangulation check.",
    payload: { poset: TWO_LIMITS, seed: "zigzag" },
  },
  {
    kind: "session",
    id: "nested-fan",
    name: "Nested fan at one limit",
    blurb: "Locally finite but not a triangulation; the failed check opens the pinched-disk view.",
    payload: { poset: TWO_LIMITS, seed: "nested" },
  },
  {
    kind: "session",
    id: "rotation-24",
    name: "24-cycle, eighth-turn rotation",
    blurb: "Rotation-compatible arcs on 24 cyclic points; flipping reaches 132 clusters.",
    payload: {
      poset: "zn:24@1/8",
      seed: [
        [0, 6],
        [6, 12],
        [12, 18],
        [0, 18],
        [6, 18],
      ],
    },
  },
  {
    kind: "cactus",
    id: "ten-site-pinch",
    name: "Ten-limit pinch tree",
    blurb: "A noncrossing partition glues ten limit points into six disks joined in a tree.",
    poset: {
      kind: "z_zinfty",
      limits: ["0", "7/72", "11/72", "1/4", "25/72", "1/2", "43/72", "3/4", "61/72", "65/72"],
      auto: "canonical",
    },
    classes: [
      [0, 1, 9],
      [2, 8],
      [3, 4],
      [5, 7],
      [6],
    ],
  },
];

export function presetById(id: string): Preset | undefined {
  return PRESETS.find((p) => p.id === id);
}
