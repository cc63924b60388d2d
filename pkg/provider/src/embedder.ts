/**
 * Word-level contextual embeddings: WordPiece subtokens run through the
 * encoder, selected layers are summed, and each word takes the mean of
 * its piece vectors. Sentences longer than the model window are skipped
 * (not truncated: truncation would corrupt target-index alignment) and
 * reported.
 */

import { ProviderConfig } from "./config.js";
import { EmbeddedSentence, InputSentence } from "./formats.js";
import { resolveModel, TransformerEncoder } from "./model.js";
import { WordPieceTokenizer } from "./tokenizer.js";

export interface EmbedResult {
  embedded: EmbeddedSentence[];
  skipped: string[];
  dim: number;
}

export class Embedder {
  readonly config: ProviderConfig;
  readonly tokenizer: WordPieceTokenizer;
  readonly encoder: TransformerEncoder;
  readonly maxLen: number;

  constructor(config: ProviderConfig) {
    this.config = config;
    this.tokenizer = new WordPieceTokenizer();
    const spec = resolveModel(config.modelName);
    this.encoder = new TransformerEncoder(spec, this.tokenizer.vocabSize);
    this.maxLen = config.maxLen ?? spec.maxLen;
  }

  get dim(): number {
    return this.encoder.spec.dim;
  }

  embedSentences(sentences: InputSentence[]): EmbedResult {
    const embedded: EmbeddedSentence[] = [];
    const skipped: string[] = [];
    const fits: InputSentence[] = [];
    const encoded: { ids: number[]; spans: Array<[number, number]> }[] = [];
    for (const sentence of sentences) {
      const enc = this.tokenizer.encodeWords(sentence.tokens.map((t) => t.text));
      if (enc.ids.length > this.maxLen) {
        skipped.push(sentence.sentenceId);
        continue;
      }
      fits.push(sentence);
      encoded.push(enc);
    }
    const dim = this.dim;
    for (let start = 0; start < fits.length; start += this.config.batchSize) {
      const batch = encoded.slice(start, start + this.config.batchSize);
      const sums = this.encoder.encode(
        batch.map((e) => e.ids), this.config.layerSelection);
      batch.forEach((enc, b) => {
        const sentence = fits[start + b];
        const summed = sums[b];
        const vectors = enc.spans.map(([from, to]) => {
          const vec = new Float32Array(dim);
          for (let p = from; p < to; p++) {
            for (let j = 0; j < dim; j++) vec[j] += summed[p * dim + j];
          }
          const count = to - from;
          for (let j = 0; j < dim; j++) vec[j] /= count;
          return vec;
        });
        embedded.push({ sentence, vectors });
      });
    }
    return { embedded, skipped, dim };
  }
}
