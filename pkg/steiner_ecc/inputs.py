"""
Edge-list reading and writing.

The format is line oriented::

    # a comment
    0 1
    1 2

One edge per line as two whitespace separated non-negative integer labels.
Blank lines and lines starting with ``#`` are ignored, ``\\r`` is stripped
and the trailing newline is optional. A line holding a single label
declares a vertex without an edge, which is how a single-vertex tree is
written. Labels are remapped to dense ids ``0..n-1`` in order of first
appearance unless ``dense=True``.
"""
import io
import re

from .errors import ParseError, TreeError
from .tree import build_tree

__all__ = ("parse_edge_list", "read_edge_list", "format_edge_list", "label_map")

label_regex = re.compile(r"^\d+$")


def _label(token, line):
    if not label_regex.match(token):
        raise ParseError("{0!r} is not a non-negative integer label".format(token), line=line)
    return int(token)


def parse_edge_list(text, dense=False):
    """
    Parse an edge list into a validated tree.

    :param str text: the edge list (``bytes`` are decoded as UTF-8)
    :param bool dense: keep labels as ids; they must then be exactly ``0..n-1``
    :rtype: Tree
    :raises ParseError: on a malformed line or an empty input
    :raises TreeError: when the edges do not form a tree; carries the line number
    """
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseError("Input is not valid UTF-8: {0}".format(e))

    ids = {}
    order = []
    edges = []
    lines = []

    def vertex(label):
        if label not in ids:
            ids[label] = label if dense else len(order)
            order.append(label)
        return ids[label]

    for number, raw in enumerate(text.split("\n"), 1):
        line = raw.replace("\r", "").strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise ParseError("Expected two vertex labels, got {0}".format(len(tokens)), line=number)
        labels = [_label(token, number) for token in tokens]
        if len(labels) == 1:
            vertex(labels[0])
            continue
        edges.append((vertex(labels[0]), vertex(labels[1])))
        lines.append(number)

    if not order:
        raise ParseError("Empty edge list")

    n = len(order)
    if dense and max(order) != n - 1:
        raise ParseError("Labels are not the dense range 0..{0}".format(n - 1))
    try:
        return build_tree(edges, n=n, labels=None if dense else order)
    except TreeError as e:
        if e.index is not None:
            e.at_line(lines[e.index])
        raise


def read_edge_list(filename, dense=False):
    """Parse the edge list stored in ``filename``"""
    with io.open(filename, "rb") as infile:
        return parse_edge_list(infile.read(), dense=dense)


def _needs_declarations(tree):
    seen = []
    for edge in tree.edges:
        for vertex in edge:
            if vertex not in seen:
                seen.append(vertex)
    return seen != list(range(tree.n))


def format_edge_list(tree, header=True):
    """
    Write ``tree`` as an edge list using its original labels.

    When the edges alone would introduce the vertices out of id order, every
    vertex is first declared on a line of its own, so that parsing the output
    gives back the same ids.

    :param bool header: prepend a ``# n=<order>`` comment
    """
    out = ["# n={0}\n".format(tree.n)] if header else []
    if _needs_declarations(tree):
        out.extend("{0}\n".format(tree.label_of(v)) for v in range(tree.n))
    for u, v in tree.edges:
        out.append("{0} {1}\n".format(tree.label_of(u), tree.label_of(v)))
    return "".join(out)


def label_map(tree):
    """Original label (as a string) to dense id"""
    return dict((str(tree.label_of(v)), v) for v in range(tree.n))
