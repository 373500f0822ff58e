"""
Module implementing helper methods working on lists and label sequences
"""
from collections import defaultdict
from typing import Any
from typing import Dict
from typing import Hashable
from typing import List
from typing import Sequence


def group_by_value(list_to_group: Sequence[Any]) -> Dict[Any, List[int]]:
    """
    Given a list, group together all equal values by storing them in a dictionary.
    The keys are the unique list values, in order of first appearance, and the values are list of
    ints, corresponding to the positions of the current key in the original list.
    """
    indices: Dict[Any, List[int]] = defaultdict(list)
    for i, value in enumerate(list_to_group):
        indices[value].append(i)
    return dict(indices)


def index_map(labels: Sequence[Hashable]) -> Dict[Hashable, int]:
    """
    Position of each label in labels. Labels are expected to be distinct.
    """
    return {label: position for position, label in enumerate(labels)}


def duplicates(labels: Sequence[Hashable]) -> List[Hashable]:
    """
    Labels appearing more than once in labels, in order of second appearance
    """
    seen: set = set()
    repeated = []
    for label in labels:
        if label in seen and label not in repeated:
            repeated.append(label)
        seen.add(label)
    return repeated


def dict_to_class(data: dict):
    """
    Convert a (possibly nested) dictionary to a class.
    """
    return {k: type(k, (), dict_to_class(v)) if isinstance(v, dict) else v for k, v in data.items()}
