/**
 * The discrete judgment scale: integers 9..2, parity 1, and their
 * reciprocals. Picks are kept as exact rationals so the mirrored cell of
 * the matrix is bit-exact (n * (1/n) === 1 in doubles for n <= 9).
 */

export interface Rational {
  num: number;
  den: number;
}

export const SAATY_PICKS: Rational[] = [
  ...Array.from({ length: 8 }, (_, i) => ({ num: 9 - i, den: 1 })), // 9..2
  { num: 1, den: 1 },
  ...Array.from({ length: 8 }, (_, i) => ({ num: 1, den: i + 2 })), // 1/2..1/9
];

export function value(r: Rational): number {
  return r.num / r.den;
}

export function reciprocal(r: Rational): Rational {
  return { num: r.den, den: r.num };
}

export function label(r: Rational): string {
  return r.den === 1 ? String(r.num) : `${r.num}/${r.den}`;
}

export function parseLabel(text: string): Rational {
  const match = /^(\d+)(?:\/(\d+))?$/.exec(text.trim());
  if (!match) throw new Error(`not a judgment pick: ${text}`);
  const pick = { num: Number(match[1]), den: Number(match[2] ?? "1") };
  if (!SAATY_PICKS.some((p) => p.num === pick.num && p.den === pick.den)) {
    throw new Error(`not on the judgment scale: ${text}`);
  }
  return pick;
}
