/** Provider configuration with the paper-scale defaults. */

export interface ProviderConfig {
  modelName: string;
  /** negative indices from the top; default is the last four layers */
  layerSelection: number[];
  layerCombine: "sum";
  subtokenCombine: "mean";
  batchSize: number;
  device: "cpu";
  /** optional override of the model's sequence window (tests) */
  maxLen?: number;
}

export const DEFAULT_CONFIG: ProviderConfig = {
  modelName: "bert-large-cased",
  layerSelection: [-1, -2, -3, -4],
  layerCombine: "sum",
  subtokenCombine: "mean",
  batchSize: 8,
  device: "cpu",
};

export function parseLayerSelection(value: string): number[] {
  const layers = value.split(",").map((s) => parseInt(s.trim(), 10));
  if (layers.length === 0 || layers.some((n) => Number.isNaN(n) || n === 0)) {
    throw new Error(`bad layer selection ${JSON.stringify(value)}`);
  }
  return layers;
}
