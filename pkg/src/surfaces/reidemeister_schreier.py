__author__ = "Antoine Richard"
__copyright__ = "Copyright 2023-24, Space Robotics Lab, SnT, University of Luxembourg, SpaceR"
__license__ = "BSD 3-Clause"
__version__ = "2.0.0"
__maintainer__ = "Antoine Richard"
__email__ = "antoine.richard@uni.lu"
__status__ = "development"

"""
Reidemeister-Schreier presentations of finite index subgroups.

The subgroup is the preimage H = phi^-1(K) of a subgroup K of a finite permutation group, under a
homomorphism phi given by the permutations of the generators. Right cosets H w correspond to right
cosets K phi(w), which are enumerated breadth first. The BFS tree gives a Schreier transversal
(prefix closed, lexicographically least in the letter order x_1, x_1^-1, x_2, ...)."""

from typing import Dict, List, Optional, Sequence, Tuple
import dataclasses
import collections
import logging

from src.errors import InputError, UnsupportedError
from src.surfaces.presentations import GroupPresentation, Word, as_group, free_reduce, invert_word

logger = logging.getLogger(__name__)

Perm = Tuple[int, ...]


def compose(p: Perm, q: Perm) -> Perm:
    """Left-to-right product: first p, then q."""

    return tuple(q[x] for x in p)


def invert(p: Perm) -> Perm:
    inverse = [0] * len(p)
    for x, y in enumerate(p):
        inverse[y] = x
    return tuple(inverse)


def perm_of_word(word: Sequence[int], images: Sequence[Perm]) -> Perm:
    degree = len(images[0])
    result = tuple(range(degree))
    for letter in word:
        image = images[abs(letter) - 1]
        result = compose(result, image if letter > 0 else invert(image))
    return result


@dataclasses.dataclass
class SchreierPresentation:
    """
    Args:
        presentation (GroupPresentation): presentation of the subgroup, marked when the input is.
        index (int): number of cosets.
        transversal (list): coset representative words, in BFS order.
        generator_words (list): each Schreier generator as a word in the original generators.
        generator_images (list): permutation image of each Schreier generator, an element of K.
    """

    presentation: GroupPresentation
    index: int
    transversal: List[Word]
    generator_words: List[Word]
    generator_images: List[Perm]

    def to_dict(self) -> Dict:
        return {
            "index": self.index,
            "presentation": self.presentation.to_dict(),
            "generator_words": [list(w) for w in self.generator_words],
        }


class _CosetTable:
    def __init__(self, images: Sequence[Perm], subgroup: Sequence[Perm]):
        self.images = [tuple(p) for p in images]
        self.inverses = [invert(p) for p in self.images]
        self.subgroup = [tuple(k) for k in subgroup]

    def canonical(self, p: Perm) -> Perm:
        return min(compose(k, p) for k in self.subgroup)

    def act(self, coset: Perm, letter: int) -> Perm:
        image = self.images[abs(letter) - 1] if letter > 0 else self.inverses[abs(letter) - 1]
        return self.canonical(compose(coset, image))


def subgroup_presentation(
    presentation,
    images: Sequence[Perm],
    subgroup: Sequence[Perm],
    max_index: Optional[int] = None,
) -> SchreierPresentation:
    """
    Presentation of the preimage of a subgroup K under phi: G -> Sym(d).

    Args:
        presentation: GroupPresentation or SurfacePresentation of G.
        images (list): phi of each generator, as 0-based image tuples.
        subgroup (list): the elements of K (closed under products).
        max_index (int): optional bound on the number of cosets.

    Returns:
        SchreierPresentation: the subgroup presentation with its transversal and generator data.

    Raises:
        UnsupportedError: if the images are not finite permutations.
        InputError: if K is not a subgroup or the images do not respect the relators.
    """

    group = as_group(presentation)
    if len(images) != group.n_generators:
        raise InputError(f"Expected {group.n_generators} generator images, got {len(images)}.")
    for image in images:
        if not isinstance(image, (tuple, list)) or sorted(image) != list(range(len(image))):
            raise UnsupportedError("Generator images must be permutations of a finite set.")
    degree = len(images[0])
    identity = tuple(range(degree))
    subgroup = sorted({tuple(k) for k in subgroup} | {identity})
    members = set(subgroup)
    if any(compose(a, b) not in members for a in subgroup for b in subgroup):
        raise InputError("The target set is not closed under products, so it is not a subgroup.")
    for relator in group.relators:
        if perm_of_word(relator, images) != identity:
            raise InputError(f"Relator {group.format_word(relator)} does not map to the identity.")

    table = _CosetTable(images, subgroup)
    letters = [sign * x for x in range(1, group.n_generators + 1) for sign in (1, -1)]

    # Coset enumeration with a BFS tree.
    start = table.canonical(identity)
    coset_ids: Dict[Perm, int] = {start: 0}
    cosets: List[Perm] = [start]
    transversal: List[Word] = [()]
    tree_edges = set()
    queue = collections.deque([0])
    while queue:
        current = queue.popleft()
        for letter in letters:
            target = table.act(cosets[current], letter)
            if target not in coset_ids:
                coset_ids[target] = len(cosets)
                cosets.append(target)
                transversal.append(transversal[current] + (letter,))
                tree_edges.add((current, letter))
                queue.append(coset_ids[target])
                if max_index is not None and len(cosets) > max_index:
                    raise UnsupportedError(f"Index exceeds the bound {max_index}.")
    index = len(cosets)
    logger.debug(f"Coset enumeration: index {index} for {group.n_generators} generators")

    def is_tree_edge(coset: int, letter: int) -> bool:
        if (coset, letter) in tree_edges:
            return True
        target = coset_ids[table.act(cosets[coset], letter)]
        return (target, -letter) in tree_edges

    # Schreier generators s(c, x) = t_c x t_cx^-1 for the non-tree edges with positive x.
    generator_of: Dict[Tuple[int, int], int] = {}
    names: List[str] = []
    words: List[Word] = []
    generator_images: List[Perm] = []
    for coset in range(index):
        for x in range(1, group.n_generators + 1):
            if is_tree_edge(coset, x):
                continue
            target = coset_ids[table.act(cosets[coset], x)]
            word = free_reduce(transversal[coset] + (x,) + invert_word(transversal[target]))
            if not word:
                continue
            generator_of[(coset, x)] = len(names) + 1
            names.append(f"{group.generators[x - 1]}@{coset}")
            words.append(word)
            generator_images.append(perm_of_word(word, images))

    relators: List[Word] = []
    for relator in group.relators:
        for coset in range(index):
            rewritten: List[int] = []
            current = coset
            for letter in relator:
                if letter > 0:
                    generator = generator_of.get((current, letter))
                    if generator is not None:
                        rewritten.append(generator)
                    current = coset_ids[table.act(cosets[current], letter)]
                else:
                    previous = coset_ids[table.act(cosets[current], letter)]
                    generator = generator_of.get((previous, -letter))
                    if generator is not None:
                        rewritten.append(-generator)
                    current = previous
            reduced = free_reduce(rewritten)
            if reduced:
                relators.append(reduced)

    marks = None
    if group.marks is not None:
        marks = []
        for word in words:
            sign = 1
            for letter in word:
                sign *= group.marks[abs(letter) - 1]
            marks.append(sign)
    result = GroupPresentation(tuple(names), tuple(relators), None if marks is None else tuple(marks))
    logger.info(f"Reidemeister-Schreier: index {index}, {len(names)} generators, {len(relators)} relators")
    return SchreierPresentation(
        presentation=result,
        index=index,
        transversal=transversal,
        generator_words=words,
        generator_images=generator_images,
    )


def orientation_cover(presentation) -> SchreierPresentation:
    """
    Kernel of the orientation character, i.e. the orientable double cover of a non-orientable surface
    (the whole group when every mark is +1).
    """

    group = as_group(presentation)
    if group.marks is None:
        raise InputError("orientation_cover needs a marked presentation.")
    images = [(0, 1) if mark == 1 else (1, 0) for mark in group.marks]
    return subgroup_presentation(group, images, [(0, 1)])
