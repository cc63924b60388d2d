/**
 * Input readers and the corpus JSONL writer.
 *
 * Inputs:
 *  - SemCor-style annotated text: `token<TAB>lemma<TAB>pos<TAB>sense_key`
 *    per line with `-` for missing fields, blank line between sentences.
 *  - Gloss token plans: JSONL `{"sense_key": str, "tokens": [str]}`.
 *  - WiC pairs: `target<TAB>pos<TAB>idx1-idx2<TAB>sentence1<TAB>sentence2`.
 *
 * Output (all commands): one sentence object per line,
 * `{"sentence_id", "dim", "tokens": [{text, lemma, pos, sense_key, vector}]}` -
 * bit-compatible with the primary component's corpus parser.
 */

export interface InputToken {
  text: string;
  lemma: string;
  pos: string | null;
  senseKey: string | null;
}

export interface InputSentence {
  sentenceId: string;
  tokens: InputToken[];
}

const POS_VALUES = new Set(["n", "v", "a", "r", "s"]);

export function parseSemcorText(text: string): InputSentence[] {
  const sentences: InputSentence[] = [];
  let current: InputToken[] = [];
  const flush = () => {
    if (current.length > 0) {
      sentences.push({ sentenceId: `s${sentences.length}`, tokens: current });
      current = [];
    }
  };
  const lines = text.split(/\r?\n/);
  for (let i = 0; i < lines.length; i++) {
    const line = lines[i];
    if (line.trim() === "") {
      flush();
      continue;
    }
    const fields = line.split("\t");
    if (fields.length !== 4) {
      throw new Error(`line ${i + 1}: expected 4 tab-separated fields`);
    }
    const [token, lemma, posRaw, keyRaw] = fields;
    const pos = posRaw === "-" ? null : posRaw.toLowerCase();
    if (pos !== null && !POS_VALUES.has(pos)) {
      throw new Error(`line ${i + 1}: bad pos ${JSON.stringify(posRaw)}`);
    }
    current.push({
      text: token,
      lemma: lemma === "-" ? token.toLowerCase() : lemma,
      pos,
      senseKey: keyRaw === "-" ? null : keyRaw,
    });
  }
  flush();
  return sentences;
}

export function parseGlossPlans(text: string): InputSentence[] {
  const sentences: InputSentence[] = [];
  const lines = text.split(/\r?\n/);
  for (let i = 0; i < lines.length; i++) {
    if (lines[i].trim() === "") continue;
    let obj: { sense_key?: unknown; tokens?: unknown };
    try {
      obj = JSON.parse(lines[i]);
    } catch {
      throw new Error(`gloss plan line ${i + 1}: invalid JSON`);
    }
    if (typeof obj.sense_key !== "string" || !Array.isArray(obj.tokens)) {
      throw new Error(`gloss plan line ${i + 1}: need sense_key and tokens`);
    }
    sentences.push({
      sentenceId: obj.sense_key,
      tokens: (obj.tokens as string[]).map((t) => ({
        text: t,
        lemma: t.toLowerCase(),
        pos: null,
        senseKey: null,
      })),
    });
  }
  return sentences;
}

/** Both sentences of every WiC row, keyed `<row>.s1` / `<row>.s2`. */
export function parseWicPairs(text: string): InputSentence[] {
  const sentences: InputSentence[] = [];
  const lines = text.split(/\r?\n/).filter((l) => l.trim() !== "");
  lines.forEach((line, row) => {
    const fields = line.split("\t");
    if (fields.length !== 5) {
      throw new Error(`WiC row ${row + 1}: expected 5 tab-separated fields`);
    }
    const [, , span, text1, text2] = fields;
    if (!/^\d+-\d+$/.test(span)) {
      throw new Error(`WiC row ${row + 1}: bad index pair ${JSON.stringify(span)}`);
    }
    for (const [side, sentence] of [[1, text1], [2, text2]] as const) {
      sentences.push({
        sentenceId: `${row}.s${side}`,
        tokens: sentence.split(/\s+/).filter(Boolean).map((w) => ({
          text: w,
          lemma: w.toLowerCase(),
          pos: null,
          senseKey: null,
        })),
      });
    }
  });
  return sentences;
}

export interface EmbeddedSentence {
  sentence: InputSentence;
  vectors: Float32Array[];
}

export function corpusJsonLine(embedded: EmbeddedSentence, dim: number): string {
  const tokens = embedded.sentence.tokens.map((tok, i) => ({
    text: tok.text,
    lemma: tok.lemma,
    pos: tok.pos,
    sense_key: tok.senseKey,
    vector: Array.from(embedded.vectors[i]),
  }));
  return JSON.stringify({
    sentence_id: embedded.sentence.sentenceId,
    dim,
    tokens,
  });
}
