/**
 * Frozen transformer encoder (inference only, eval mode).
 *
 * Architecture presets mirror the usual BERT family shapes; parameters
 * are deterministic seeded values derived per (model, layer, tensor)
 * label, since no pretrained checkpoint ships with this package.
 * Layers stream one at a time: a layer's weights are generated, applied
 * to the whole batch, then released, so even the 24x1024 configuration
 * stays within a small memory envelope.
 */

import { uniformTensor } from "./rng.js";
import {
  addInPlace,
  geluInPlace,
  layerNorm,
  matmul,
  softmaxRow,
} from "./tensor.js";

export interface ModelSpec {
  name: string;
  dim: number;
  layers: number;
  heads: number;
  ffMult: number;
  maxLen: number;
}

export const MODEL_SPECS: Record<string, Omit<ModelSpec, "name">> = {
  // the paper-scale default: 24 layers, 1024 dims, 16 heads, cased
  "bert-large-cased": { dim: 1024, layers: 24, heads: 16, ffMult: 4, maxLen: 512 },
  "bert-base-cased": { dim: 768, layers: 12, heads: 12, ffMult: 4, maxLen: 512 },
  // tiny preset for fast tests
  "test-small": { dim: 32, layers: 4, heads: 4, ffMult: 2, maxLen: 128 },
};

export function resolveModel(name: string): ModelSpec {
  const spec = MODEL_SPECS[name];
  if (!spec) {
    const known = Object.keys(MODEL_SPECS).join(", ");
    throw new Error(`unknown model ${JSON.stringify(name)}; known: ${known}`);
  }
  return { name, ...spec };
}

interface LayerWeights {
  wq: Float32Array;
  wk: Float32Array;
  wv: Float32Array;
  wo: Float32Array;
  ff1: Float32Array;
  ff2: Float32Array;
}

export class TransformerEncoder {
  readonly spec: ModelSpec;
  private readonly embeddings: Float32Array;

  constructor(spec: ModelSpec, vocabSize: number) {
    this.spec = spec;
    this.embeddings = uniformTensor(
      `${spec.name}/embeddings`, vocabSize * spec.dim, 1.0);
  }

  private layerWeights(layer: number): LayerWeights {
    const { name, dim, ffMult } = this.spec;
    const scale = 1 / Math.sqrt(dim);
    const label = (tensor: string) => `${name}/layer${layer}/${tensor}`;
    return {
      wq: uniformTensor(label("wq"), dim * dim, scale),
      wk: uniformTensor(label("wk"), dim * dim, scale),
      wv: uniformTensor(label("wv"), dim * dim, scale),
      wo: uniformTensor(label("wo"), dim * dim, scale),
      ff1: uniformTensor(label("ff1"), dim * dim * ffMult, scale),
      ff2: uniformTensor(label("ff2"), dim * ffMult * dim, scale),
    };
  }

  private embed(ids: number[]): Float32Array {
    const { dim } = this.spec;
    const out = new Float32Array(ids.length * dim);
    for (let t = 0; t < ids.length; t++) {
      const src = ids[t] * dim;
      for (let j = 0; j < dim; j++) {
        // sinusoidal positions added to the token embedding
        const angle = t / Math.pow(10000, (2 * Math.floor(j / 2)) / dim);
        const position = j % 2 === 0 ? Math.sin(angle) : Math.cos(angle);
        out[t * dim + j] = this.embeddings[src + j] + 0.1 * position;
      }
    }
    return layerNorm(out, ids.length, dim);
  }

  private attention(
    x: Float32Array, n: number, weights: LayerWeights,
  ): Float32Array {
    const { dim, heads } = this.spec;
    const dh = dim / heads;
    const q = matmul(x, weights.wq, n, dim, dim);
    const k = matmul(x, weights.wk, n, dim, dim);
    const v = matmul(x, weights.wv, n, dim, dim);
    const context = new Float32Array(n * dim);
    const scores = new Float32Array(n);
    const invSqrt = 1 / Math.sqrt(dh);
    for (let h = 0; h < heads; h++) {
      const hoff = h * dh;
      for (let i = 0; i < n; i++) {
        for (let j = 0; j < n; j++) {
          let dot = 0;
          const qi = i * dim + hoff;
          const kj = j * dim + hoff;
          for (let p = 0; p < dh; p++) dot += q[qi + p] * k[kj + p];
          scores[j] = dot * invSqrt;
        }
        softmaxRow(scores, 0, n);
        const ci = i * dim + hoff;
        for (let j = 0; j < n; j++) {
          const a = scores[j];
          const vj = j * dim + hoff;
          for (let p = 0; p < dh; p++) context[ci + p] += a * v[vj + p];
        }
      }
    }
    return matmul(context, weights.wo, n, dim, dim);
  }

  /**
   * Hidden states after each selected layer, summed per token.
   * `layerSelection` uses negative indices from the top ([-1, -4] is
   * the sum of the last four layers).
   */
  encode(batch: number[][], layerSelection: number[]): Float32Array[] {
    const { dim, layers } = this.spec;
    const wanted = new Set(layerSelection.map(
      (s) => (s < 0 ? layers + s : s - 1)));
    for (const idx of wanted) {
      if (idx < 0 || idx >= layers) {
        throw new Error(`layer selection out of range for ${layers}-layer model`);
      }
    }
    let states = batch.map((ids) => this.embed(ids));
    const sums = batch.map((ids) => new Float32Array(ids.length * dim));
    for (let layer = 0; layer < layers; layer++) {
      const weights = this.layerWeights(layer);
      states = states.map((x, s) => {
        const n = batch[s].length;
        const attended = this.attention(x, n, weights);
        addInPlace(attended, x);
        let out = layerNorm(attended, n, dim);
        const hidden = matmul(out, weights.ff1, n, dim, dim * this.spec.ffMult);
        geluInPlace(hidden);
        const ff = matmul(hidden, weights.ff2, n, dim * this.spec.ffMult, dim);
        addInPlace(ff, out);
        out = layerNorm(ff, n, dim);
        return out;
      });
      if (wanted.has(layer)) {
        states.forEach((x, s) => addInPlace(sums[s], x));
      }
    }
    return sums;
  }
}
