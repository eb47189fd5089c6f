"""Exceções do motor de grupos (todas derivam de GroupComputationError, exceto GroupSpecError)."""


class GroupComputationError(Exception):
    """Erro genérico de cálculo em grupos de permutações."""


class DegreeMismatchError(GroupComputationError, ValueError):
    """Permutações ou grupos com graus diferentes na mesma operação."""


class NotPrimeError(GroupComputationError, ValueError):
    """Argumento que deveria ser primo não é primo."""


class NotInGroupError(GroupComputationError, ValueError):
    """Elemento não pertence ao grupo indicado."""


class NotNormalError(GroupComputationError):
    """Subgrupo não é normal no grupo ambiente."""


class InvalidParameterError(GroupComputationError, ValueError):
    """Parâmetro fora do domínio da construção (q, tipo de coclasse, divisibilidade...)."""


class CapExceededError(GroupComputationError):
    """Limite configurado (enumeração, pares, índice) excedido."""

    def __init__(self, what: str, requested: int, cap: int):
        super().__init__(f"{what}: {requested} excede o limite {cap}")
        self.what = what
        self.requested = requested
        self.cap = cap


class HypothesisSkip(GroupComputationError):
    """Hipótese de um teorema não vale para a instância; o check é pulado, não reprovado."""


class GroupSpecError(ValueError):
    """Especificação de grupo inválida; offset é a posição (em bytes) do problema."""

    def __init__(self, message: str, spec: str, offset: int):
        super().__init__(f"{message} (posição {offset} em {spec!r})")
        self.spec = spec
        self.offset = offset
