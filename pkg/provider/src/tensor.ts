/** Row-major Float32Array matrix helpers for the encoder forward pass. */

export function matmul(
  a: Float32Array, b: Float32Array, m: number, k: number, n: number,
): Float32Array {
  const out = new Float32Array(m * n);
  const row = new Float64Array(n);
  for (let i = 0; i < m; i++) {
    const ai = i * k;
    row.fill(0);
    let p = 0;
    for (; p + 1 < k; p += 2) {
      const av0 = a[ai + p];
      const av1 = a[ai + p + 1];
      const b0 = p * n;
      const b1 = (p + 1) * n;
      for (let j = 0; j < n; j++) {
        row[j] += av0 * b[b0 + j] + av1 * b[b1 + j];
      }
    }
    for (; p < k; p++) {
      const av = a[ai + p];
      const b0 = p * n;
      for (let j = 0; j < n; j++) row[j] += av * b[b0 + j];
    }
    const oi = i * n;
    for (let j = 0; j < n; j++) out[oi + j] = row[j];
  }
  return out;
}

export function addInPlace(target: Float32Array, source: Float32Array): void {
  for (let i = 0; i < target.length; i++) target[i] += source[i];
}

/** Layer norm over the last dimension, identity affine parameters. */
export function layerNorm(x: Float32Array, rows: number, dim: number): Float32Array {
  const out = new Float32Array(x.length);
  for (let r = 0; r < rows; r++) {
    const base = r * dim;
    let mean = 0;
    for (let j = 0; j < dim; j++) mean += x[base + j];
    mean /= dim;
    let variance = 0;
    for (let j = 0; j < dim; j++) {
      const d = x[base + j] - mean;
      variance += d * d;
    }
    variance /= dim;
    const inv = 1 / Math.sqrt(variance + 1e-12);
    for (let j = 0; j < dim; j++) {
      out[base + j] = (x[base + j] - mean) * inv;
    }
  }
  return out;
}

export function softmaxRow(x: Float32Array, offset: number, n: number): void {
  let max = -Infinity;
  for (let j = 0; j < n; j++) max = Math.max(max, x[offset + j]);
  let sum = 0;
  for (let j = 0; j < n; j++) {
    const e = Math.exp(x[offset + j] - max);
    x[offset + j] = e;
    sum += e;
  }
  for (let j = 0; j < n; j++) x[offset + j] /= sum;
}

const GELU_C = Math.sqrt(2 / Math.PI);

export function geluInPlace(x: Float32Array): void {
  for (let i = 0; i < x.length; i++) {
    const v = x[i];
    x[i] = 0.5 * v * (1 + Math.tanh(GELU_C * (v + 0.044715 * v * v * v)));
  }
}
