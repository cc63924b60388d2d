/**
 * Cased WordPiece tokenizer over a generated vocabulary.
 *
 * The vocabulary is built procedurally (printable ASCII characters,
 * their "##" continuations, and a fixed list of frequent English
 * pieces), so tokenization is fully deterministic and needs no vocab
 * file. Unmatchable words collapse to [UNK].
 */

export const PAD = "[PAD]";
export const UNK = "[UNK]";
export const CLS = "[CLS]";
export const SEP = "[SEP]";

const COMMON_PIECES = [
  "the", "of", "and", "to", "in", "that", "for", "with", "was", "his",
  "all", "this", "they", "one", "have", "not", "are", "but", "from", "she",
  "make", "makes", "made", "cook", "food", "word", "sense", "work", "world",
  "time", "year", "people", "other", "some", "what", "when", "into", "only",
  "##s", "##ed", "##ing", "##er", "##est", "##ly", "##y", "##e", "##es",
  "##tion", "##al", "##ic", "##ous", "##ment", "##ness", "##able", "##ity",
  "##an", "##en", "##on", "##in", "##at", "##or", "##ar", "##th", "##nd",
  "un", "re", "pre", "dis", "over", "under", "out", "up", "down",
];

function printableAscii(): string[] {
  const chars: string[] = [];
  for (let code = 33; code <= 126; code++) {
    chars.push(String.fromCharCode(code));
  }
  return chars;
}

export class WordPieceTokenizer {
  readonly vocab = new Map<string, number>();
  readonly pieces: string[] = [];
  private maxPieceLength = 1;

  constructor() {
    for (const token of [PAD, UNK, CLS, SEP]) this.addPiece(token);
    for (const ch of printableAscii()) {
      this.addPiece(ch);
      this.addPiece("##" + ch);
    }
    for (const piece of COMMON_PIECES) this.addPiece(piece);
  }

  private addPiece(piece: string): void {
    if (!this.vocab.has(piece)) {
      this.vocab.set(piece, this.pieces.length);
      this.pieces.push(piece);
      const bare = piece.startsWith("##") ? piece.length - 2 : piece.length;
      if (bare > this.maxPieceLength) this.maxPieceLength = bare;
    }
  }

  get vocabSize(): number {
    return this.pieces.length;
  }

  /** Greedy longest-match-first split of one word (cased). */
  wordToPieces(word: string): number[] {
    const out: number[] = [];
    let start = 0;
    while (start < word.length) {
      let end = Math.min(word.length, start + this.maxPieceLength);
      let found = -1;
      while (end > start) {
        const piece = (start > 0 ? "##" : "") + word.slice(start, end);
        const id = this.vocab.get(piece);
        if (id !== undefined) {
          found = id;
          break;
        }
        end--;
      }
      if (found < 0) {
        return [this.vocab.get(UNK)!];
      }
      out.push(found);
      start = end;
    }
    return out.length > 0 ? out : [this.vocab.get(UNK)!];
  }

  /**
   * Encode pre-tokenized words into one wordpiece sequence with
   * [CLS]/[SEP] and per-word alignment spans over that sequence.
   */
  encodeWords(words: string[]): { ids: number[]; spans: Array<[number, number]> } {
    const ids: number[] = [this.vocab.get(CLS)!];
    const spans: Array<[number, number]> = [];
    for (const word of words) {
      const pieces = this.wordToPieces(word);
      spans.push([ids.length, ids.length + pieces.length]);
      ids.push(...pieces);
    }
    ids.push(this.vocab.get(SEP)!);
    return { ids, spans };
  }
}
