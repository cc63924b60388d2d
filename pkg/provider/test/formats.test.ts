import { describe, expect, it } from "vitest";
import {
  corpusJsonLine,
  parseGlossPlans,
  parseSemcorText,
  parseWicPairs,
} from "../src/formats.js";

describe("parseSemcorText", () => {
  it("reads token/lemma/pos/sense_key columns with '-' as missing", () => {
    const [s] = parseSemcorText("makes\tmake\tv\tmake%2:36:00::\nthe\t-\t-\t-");
    expect(s.sentenceId).toBe("s0");
    expect(s.tokens[0]).toEqual({
      text: "makes", lemma: "make", pos: "v", senseKey: "make%2:36:00::",
    });
    expect(s.tokens[1]).toEqual({
      text: "the", lemma: "the", pos: null, senseKey: null,
    });
  });

  it("splits sentences on blank lines", () => {
    const sentences = parseSemcorText("a\ta\t-\t-\n\nb\tb\t-\t-\n");
    expect(sentences.map((s) => s.sentenceId)).toEqual(["s0", "s1"]);
  });

  it("rejects wrong column counts and bad pos", () => {
    expect(() => parseSemcorText("just\ttwo")).toThrow(/4 tab-separated/);
    expect(() => parseSemcorText("a\ta\tX\t-")).toThrow(/bad pos/);
  });
});

describe("parseGlossPlans", () => {
  it("keys sentences by sense_key and keeps token order", () => {
    const [plan] = parseGlossPlans(
      '{"sense_key": "cook%2:36:00::", "tokens": ["cook", "cook", "fix"]}');
    expect(plan.sentenceId).toBe("cook%2:36:00::");
    expect(plan.tokens.map((t) => t.text)).toEqual(["cook", "cook", "fix"]);
  });

  it("rejects malformed lines", () => {
    expect(() => parseGlossPlans("{broken")).toThrow(/invalid JSON/);
    expect(() => parseGlossPlans('{"tokens": []}')).toThrow(/sense_key/);
  });
});

describe("parseWicPairs", () => {
  it("emits <row>.s1 and <row>.s2 sentences", () => {
    const rows = parseWicPairs(
      "make\tV\t1-2\tShe makes cake\tThey make money\n"
      + "cook\tN\t0-0\tThe cook left\tA cook arrived\n");
    expect(rows.map((s) => s.sentenceId)).toEqual(
      ["0.s1", "0.s2", "1.s1", "1.s2"]);
    expect(rows[0].tokens.map((t) => t.text)).toEqual(["She", "makes", "cake"]);
  });

  it("rejects bad rows", () => {
    expect(() => parseWicPairs("only\tfour\tcolumns\there")).toThrow(/5 tab/);
    expect(() => parseWicPairs("a\tN\tx-y\tb c\td e")).toThrow(/index pair/);
  });
});

describe("corpusJsonLine", () => {
  it("serializes the primary component's schema", () => {
    const line = corpusJsonLine({
      sentence: {
        sentenceId: "s0",
        tokens: [{ text: "hi", lemma: "hi", pos: null, senseKey: null }],
      },
      vectors: [new Float32Array([0.5, -1.25])],
    }, 2);
    expect(JSON.parse(line)).toEqual({
      sentence_id: "s0",
      dim: 2,
      tokens: [{ text: "hi", lemma: "hi", pos: null, sense_key: null,
                 vector: [0.5, -1.25] }],
    });
  });
});
