"""Checks against the official WiC release files.

Point SENSEVEC_WIC_DIR at a directory containing train/train.data.txt,
train/train.gold.txt, dev/dev.data.txt, dev/dev.gold.txt and
test/test.data.txt to enable; skips otherwise.
"""

import os

import pytest

from sensevec.wic import load_wic_dataset

WIC_DIR = os.environ.get("SENSEVEC_WIC_DIR")

pytestmark = pytest.mark.skipif(
    not WIC_DIR, reason="SENSEVEC_WIC_DIR not set; WiC release checks skipped")


@pytest.mark.parametrize("split,expected", [
    ("train", 5428), ("dev", 638), ("test", 1400)])
def test_release_split_sizes(split, expected):
    data_path = os.path.join(WIC_DIR, split, f"{split}.data.txt")
    gold_path = os.path.join(WIC_DIR, split, f"{split}.gold.txt")
    with open(data_path, encoding="utf-8") as data:
        if os.path.isfile(gold_path):
            with open(gold_path, encoding="utf-8") as gold:
                instances = load_wic_dataset(data, gold_reader=gold)
            assert all(inst.gold is not None for inst in instances)
        else:
            instances = load_wic_dataset(data)
    assert len(instances) == expected
    assert all(inst.pos in ("n", "v", "a", "r") for inst in instances)
