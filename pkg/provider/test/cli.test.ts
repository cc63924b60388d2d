import { execFileSync } from "node:child_process";
import { mkdtempSync, readFileSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

const CLI = join(__dirname, "..", "dist", "cli.js");

function run(args: string[]): { report: Record<string, unknown> } {
  const stdout = execFileSync("node", [CLI, ...args], { encoding: "utf-8" });
  return { report: JSON.parse(stdout) };
}

// integration through the built CLI with the small preset
describe("cli", () => {
  const dir = mkdtempSync(join(tmpdir(), "provider-"));

  it("embed-sentences writes parseable corpus JSONL", () => {
    const input = join(dir, "sample.tsv");
    writeFileSync(input,
      "She\tshe\t-\t-\nmakes\tmake\tv\tmake%2:36:00::\n\nok\tok\t-\t-\n");
    const output = join(dir, "out.jsonl");
    const { report } = run(["embed-sentences", "--model", "test-small",
      "--input", input, "--output", output]);
    expect(report.sentences).toBe(2);
    expect(report.dim).toBe(32);
    const lines = readFileSync(output, "utf-8").trim().split("\n");
    expect(lines).toHaveLength(2);
    const first = JSON.parse(lines[0]);
    expect(first.tokens).toHaveLength(2);
    expect(first.tokens[1].sense_key).toBe("make%2:36:00::");
    expect(first.tokens[1].vector).toHaveLength(32);
  });

  it("embed-gloss-plans keeps one vector per plan token", () => {
    const input = join(dir, "plans.jsonl");
    writeFileSync(input, JSON.stringify({
      sense_key: "cook%2:36:00::",
      tokens: ["cook", "cook", "fix", "ready", "prepare", "for", "eating"],
    }) + "\n");
    const output = join(dir, "gloss.jsonl");
    const { report } = run(["embed-gloss-plans", "--model", "test-small",
      "--input", input, "--output", output]);
    expect(report.sentences).toBe(1);
    const record = JSON.parse(readFileSync(output, "utf-8").trim());
    expect(record.sentence_id).toBe("cook%2:36:00::");
    expect(record.tokens).toHaveLength(7);
  });

  it("embed-wic emits <id>.s1/<id>.s2 keys", () => {
    const input = join(dir, "wic.tsv");
    writeFileSync(input, "make\tV\t1-1\tShe makes cake\tThey make money\n");
    const output = join(dir, "wic_emb.jsonl");
    const { report } = run(["embed-wic", "--model", "test-small",
      "--input", input, "--output", output]);
    expect(report.sentences).toBe(2);
    const ids = readFileSync(output, "utf-8").trim().split("\n")
      .map((line) => JSON.parse(line).sentence_id);
    expect(ids).toEqual(["0.s1", "0.s2"]);
  });

  it("re-running produces byte-identical output", () => {
    const input = join(dir, "again.tsv");
    writeFileSync(input, "Dogs\tdog\tn\t-\nrun\trun\tv\t-\n");
    const out1 = join(dir, "a.jsonl");
    const out2 = join(dir, "b.jsonl");
    run(["embed-sentences", "--model", "test-small", "--input", input,
      "--output", out1]);
    run(["embed-sentences", "--model", "test-small", "--input", input,
      "--output", out2]);
    expect(readFileSync(out1, "utf-8")).toBe(readFileSync(out2, "utf-8"));
  });

  it("skipped sentences are listed in the run report", () => {
    const input = join(dir, "long.tsv");
    const words = Array.from({ length: 200 }, (_, i) => `w${i}\tw${i}\t-\t-`);
    writeFileSync(input, words.join("\n") + "\n");
    const output = join(dir, "long.jsonl");
    const { report } = run(["embed-sentences", "--model", "test-small",
      "--max-len", "64", "--input", input, "--output", output]);
    expect(report.sentences).toBe(0);
    expect(report.skipped).toEqual(["s0"]);
  });
});
