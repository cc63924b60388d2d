/**
 * Provider CLI: three subcommands writing the corpus JSONL format.
 *
 *   embed-sentences   --input semcor-style.tsv --output corpus.jsonl
 *   embed-gloss-plans --input plans.jsonl      --output gloss.jsonl
 *   embed-wic         --input wic.tsv          --output wic_emb.jsonl
 *
 * Shared flags: --model, --layers "-1,-2,-3,-4", --batch-size,
 * --max-len. A run report (sentence count, skipped ids, dim, model)
 * prints to stdout; the output file is the data interface.
 */

import { readFileSync, writeFileSync } from "node:fs";
import { resolve } from "node:path";
import { fileURLToPath } from "node:url";
import { DEFAULT_CONFIG, parseLayerSelection, ProviderConfig } from "./config.js";
import { Embedder } from "./embedder.js";
import {
  corpusJsonLine,
  InputSentence,
  parseGlossPlans,
  parseSemcorText,
  parseWicPairs,
} from "./formats.js";

const PARSERS: Record<string, (text: string) => InputSentence[]> = {
  "embed-sentences": parseSemcorText,
  "embed-gloss-plans": parseGlossPlans,
  "embed-wic": parseWicPairs,
};

interface CliArgs {
  command: string;
  input: string;
  output: string;
  config: ProviderConfig;
}

function parseArgs(argv: string[]): CliArgs {
  const [command, ...rest] = argv;
  if (!command || !(command in PARSERS)) {
    throw new Error(
      `usage: cli.js <${Object.keys(PARSERS).join("|")}> --input F --output F`);
  }
  const config: ProviderConfig = { ...DEFAULT_CONFIG };
  let input: string | undefined;
  let output: string | undefined;
  for (let i = 0; i < rest.length; i += 2) {
    const flag = rest[i];
    const value = rest[i + 1];
    if (value === undefined) throw new Error(`flag ${flag} needs a value`);
    switch (flag) {
      case "--input": input = value; break;
      case "--output": output = value; break;
      case "--model": config.modelName = value; break;
      case "--layers": config.layerSelection = parseLayerSelection(value); break;
      case "--batch-size": config.batchSize = parseInt(value, 10); break;
      case "--max-len": config.maxLen = parseInt(value, 10); break;
      default: throw new Error(`unknown flag ${flag}`);
    }
  }
  if (!input || !output) throw new Error("--input and --output are required");
  return { command, input, output, config };
}

export function run(argv: string[]): number {
  const args = parseArgs(argv);
  const sentences = PARSERS[args.command](readFileSync(args.input, "utf-8"));
  const embedder = new Embedder(args.config);
  const { embedded, skipped, dim } = embedder.embedSentences(sentences);
  const lines = embedded.map((e) => corpusJsonLine(e, dim));
  writeFileSync(args.output, lines.join("\n") + (lines.length ? "\n" : ""));
  process.stdout.write(JSON.stringify({
    command: args.command,
    model: args.config.modelName,
    layers: args.config.layerSelection,
    dim,
    sentences: embedded.length,
    skipped,
  }) + "\n");
  return 0;
}

const isMain = process.argv[1] !== undefined
  && fileURLToPath(import.meta.url) === resolve(process.argv[1]);
if (isMain) {
  try {
    process.exit(run(process.argv.slice(2)));
  } catch (err) {
    process.stderr.write(JSON.stringify({
      error: { message: err instanceof Error ? err.message : String(err) },
    }) + "\n");
    process.exit(1);
  }
}
