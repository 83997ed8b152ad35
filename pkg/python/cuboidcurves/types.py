from enum import Enum


class FormulaVariant(Enum):
    Printed = "printed"
    Corrected = "corrected"


class OutputFormat(Enum):
    JsonLines = "json-lines"
    Csv = "csv"


class WitnessClass(Enum):
    FullSolution = "full-solution"
    FactorOnly = "factor-only"
    NonSolution = "non-solution"


class SingularFactor(Enum):
    EDenominator = "E-denominator"
    BcMinusOneMinusB = "bc-1-b"
    BcMinusCMinusTwoB = "bc-c-2b"
    Quartic = "quartic"
    Q1 = "Q1"
    Q2 = "Q2"
    E21Quartic = "E21-quartic"
    P1 = "P1"
    P2 = "P2"
