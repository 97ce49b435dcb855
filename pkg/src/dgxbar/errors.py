"""Exception types raised across the package."""


class DGError(ValueError):
    """Base class for every error raised by dgxbar."""


class TreeError(DGError):
    """A set of tokens and arcs does not form a valid dependency tree."""


class CycleDetected(TreeError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("cycle among tokens %s" % ", ".join(map(str, self.cycle)))


class MultipleHeads(TreeError):
    def __init__(self, token):
        self.token = token
        super().__init__("token %d has more than one head" % token)


class NoRoot(TreeError):
    def __init__(self):
        super().__init__("no headless token to serve as root")


class MultipleRoots(TreeError):
    def __init__(self, roots):
        self.roots = tuple(roots)
        super().__init__("several headless tokens: %s" % ", ".join(map(str, self.roots)))


class DanglingArc(TreeError):
    def __init__(self, arc):
        self.arc = arc
        super().__init__(
            "arc %d -> %d references a missing token" % (arc.head, arc.dependent))


class DuplicateSpecifier(TreeError):
    def __init__(self, head):
        self.head = head
        super().__init__("token %d has more than one specifier" % head)


class UnknownIndex(DGError, IndexError):
    def __init__(self, index):
        self.index = index
        super().__init__("no token with index %r" % (index,))


class NonProjectiveInput(DGError):
    def __init__(self, violations):
        self.violations = tuple(violations)
        parts = ["constituent headed by %d has gap at %s"
                 % (v.head, ",".join(map(str, v.gaps))) for v in self.violations]
        super().__init__("non-projective input: " + "; ".join(parts))


class UnstackableOrder(DGError):
    """A head's dependents are not ordered complements, modifiers, specifier
    (moving outward), so the stacked tree cannot keep word order."""

    def __init__(self, head, dependent):
        self.head = head
        self.dependent = dependent
        super().__init__(
            "dependent %d of token %d is out of attachment order for stacking"
            % (dependent, head))


class InvalidInterleaving(DGError):
    def __init__(self, head, order=None):
        self.head = head
        self.order = order
        super().__init__("invalid modifier order %r for head %d" % (order, head))


class NotFlatForm(DGError):
    pass


class ParseError(DGError):
    def __init__(self, line, reason):
        self.line = line
        self.reason = reason
        super().__init__("line %s: %s" % (line, reason))
