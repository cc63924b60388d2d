/**
 * Deterministic PRNG utilities. Weight tensors are generated from a
 * string label (model/layer/tensor), so every run of every process
 * reproduces the same values with no state shared between tensors.
 */

/** FNV-1a 32-bit hash of a label string. */
export function hashLabel(label: string): number {
  let h = 0x811c9dc5;
  for (let i = 0; i < label.length; i++) {
    h ^= label.charCodeAt(i);
    h = Math.imul(h, 0x01000193);
  }
  return h >>> 0;
}

/** mulberry32: small, fast, good enough for frozen random weights. */
export function mulberry32(seed: number): () => number {
  let t = seed >>> 0;
  return () => {
    t = (t + 0x6d2b79f5) >>> 0;
    let r = Math.imul(t ^ (t >>> 15), 1 | t);
    r ^= r + Math.imul(r ^ (r >>> 7), 61 | r);
    return ((r ^ (r >>> 14)) >>> 0) / 4294967296;
  };
}

/** Uniform(-scale, scale) tensor derived from a label. */
export function uniformTensor(label: string, size: number, scale: number): Float32Array {
  const next = mulberry32(hashLabel(label));
  const out = new Float32Array(size);
  for (let i = 0; i < size; i++) {
    out[i] = (next() * 2 - 1) * scale;
  }
  return out;
}
