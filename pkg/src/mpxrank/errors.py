"""Exception hierarchy shared by all mpxrank modules."""


class MultiplexError(Exception):
    """Base class for all errors raised by mpxrank."""


class NodeNotInLayer(MultiplexError, KeyError):
    def __init__(self, node, layer):
        self.node = node
        self.layer = layer
        super().__init__(f"node {node!r} is not in layer {layer!r}")

    def __str__(self):
        return self.args[0]


class NodeNotInTable(MultiplexError, KeyError):
    def __init__(self, node):
        self.node = node
        super().__init__(f"node {node!r} is not in the ranking table")

    def __str__(self):
        return self.args[0]


class ParseError(MultiplexError, ValueError):
    """A malformed line in an edge-list, combined or manifest file."""

    def __init__(self, message, path=None, lineno=None):
        self.path = path
        self.lineno = lineno
        where = ""
        if path is not None:
            where = f"{path}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)


class EmptyLayer(MultiplexError, ValueError):
    pass


class EmptyCommonSet(MultiplexError, ValueError):
    """Too few nodes are shared by all layers for the requested operation."""


class InvalidArity(MultiplexError, ValueError):
    pass


class ArityMismatch(MultiplexError, ValueError):
    pass
