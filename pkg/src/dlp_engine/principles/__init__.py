from dlp_engine.principles.report import PropertyReport, ShapeError, SuiteSummary
from dlp_engine.principles.recovery import (all_conflicts_solved, check_early_recovery,
                                            check_generalised_early_recovery, is_acyclic, is_consistent_facts,
                                            solves_all_conflicts, verify_acyclic)
from dlp_engine.principles.generator import GeneratorParams, generate_random_dlp
from dlp_engine.principles.table import (RECOVERY_PROPERTIES, TABLE_PROPERTIES, check_table1, property_factory,
                                         run_property_suite)
from dlp_engine.principles.oracle import OracleLimitError, search_level_mapping, ws_oracle
