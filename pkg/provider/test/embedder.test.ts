import { describe, expect, it } from "vitest";
import { DEFAULT_CONFIG, ProviderConfig } from "../src/config.js";
import { Embedder } from "../src/embedder.js";
import { parseSemcorText } from "../src/formats.js";

const SMALL: ProviderConfig = { ...DEFAULT_CONFIG, modelName: "test-small" };

const SAMPLE = [
  "She\tshe\t-\t-",
  "makes\tmake\tv\tmake%2:36:00::",
  "a\ta\t-\t-",
  "cake\tcake\tn\t-",
  "",
  "Dogs\tdog\tn\t-",
  "run\trun\tv\t-",
].join("\n");

describe("Embedder", () => {
  it("emits one vector per word-level token", () => {
    const embedder = new Embedder(SMALL);
    const { embedded, skipped, dim } = embedder.embedSentences(
      parseSemcorText(SAMPLE));
    expect(skipped).toEqual([]);
    expect(embedded.map((e) => e.vectors.length)).toEqual([4, 2]);
    expect(dim).toBe(32);
    for (const e of embedded) {
      for (const v of e.vectors) expect(v.length).toBe(32);
    }
  });

  it("single-piece words equal the raw layer sum; multi-piece words average", () => {
    const embedder = new Embedder(SMALL);
    // "a" is a single piece; "Qx" splits into two pieces
    const { embedded } = embedder.embedSentences(
      parseSemcorText("a\ta\t-\t-\nQx\tqx\t-\t-"));
    const [sentence] = embedded;
    const ids = embedder.tokenizer.encodeWords(["a", "Qx"]);
    const sums = embedder.encoder.encode([ids.ids], SMALL.layerSelection);
    const dim = embedder.dim;
    const [aSpan, qxSpan] = ids.spans;
    expect(qxSpan[1] - qxSpan[0]).toBe(2);
    for (let j = 0; j < dim; j++) {
      expect(sentence.vectors[0][j]).toBeCloseTo(sums[0][aSpan[0] * dim + j], 5);
      const manual = (sums[0][qxSpan[0] * dim + j]
        + sums[0][(qxSpan[0] + 1) * dim + j]) / 2;
      expect(sentence.vectors[1][j]).toBeCloseTo(manual, 5);
    }
  });

  it("skips over-window sentences and reports them", () => {
    const embedder = new Embedder({ ...SMALL, maxLen: 6 });
    const long = Array.from({ length: 10 }, (_, i) => `w${i}\tw${i}\t-\t-`).join("\n");
    const { embedded, skipped } = embedder.embedSentences(
      parseSemcorText(`${long}\n\nok\tok\t-\t-`));
    expect(skipped).toEqual(["s0"]);
    expect(embedded).toHaveLength(1);
    expect(embedded[0].sentence.sentenceId).toBe("s1");
  });

  it("re-running is vector-identical", () => {
    const a = new Embedder(SMALL).embedSentences(parseSemcorText(SAMPLE));
    const b = new Embedder(SMALL).embedSentences(parseSemcorText(SAMPLE));
    expect(a.embedded.length).toBe(b.embedded.length);
    a.embedded.forEach((ea, i) => {
      ea.vectors.forEach((va, t) => {
        expect(Array.from(va)).toEqual(Array.from(b.embedded[i].vectors[t]));
      });
    });
  });

  it("batch size does not change the vectors", () => {
    const one = new Embedder({ ...SMALL, batchSize: 1 })
      .embedSentences(parseSemcorText(SAMPLE));
    const eight = new Embedder({ ...SMALL, batchSize: 8 })
      .embedSentences(parseSemcorText(SAMPLE));
    one.embedded.forEach((ea, i) => {
      ea.vectors.forEach((va, t) => {
        expect(Array.from(va)).toEqual(
          Array.from(eight.embedded[i].vectors[t]));
      });
    });
  });
});
