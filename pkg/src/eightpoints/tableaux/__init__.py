from eightpoints.tableaux.tableau import (
    Tableau,
    TableauSum,
    normalize,
    from_rows,
    relabel,
    tableau_product,
)
from eightpoints.tableaux.configuration import (
    Configuration,
    evaluate_invariant,
    evaluate_columns,
    sample_configuration,
    sample_configurations,
)
from eightpoints.tableaux.straighten import straighten, straighten_tableau
from eightpoints.tableaux.ssyt import enumerate_ssyt, count_ssyt, iter_ssyt
from eightpoints.tableaux.matchings import (
    Matching,
    perfect_matchings,
    noncrossing_matchings,
    uncross,
    matching_to_tableau,
    expand_in_matching_basis,
)

__all__ = [
    "Tableau",
    "TableauSum",
    "normalize",
    "from_rows",
    "relabel",
    "tableau_product",
    "Configuration",
    "evaluate_invariant",
    "evaluate_columns",
    "sample_configuration",
    "sample_configurations",
    "straighten",
    "straighten_tableau",
    "enumerate_ssyt",
    "count_ssyt",
    "iter_ssyt",
    "Matching",
    "perfect_matchings",
    "noncrossing_matchings",
    "uncross",
    "matching_to_tableau",
    "expand_in_matching_basis",
]
