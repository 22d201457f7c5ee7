from dlp_engine.updates.transformations import expone, exptwo, transform
from dlp_engine.updates.rejection import (PreconditionError, RejectionSet, rej_rd, def_constrained, rej_ws, rej_rds,
                                          rem, rej_wss)
from dlp_engine.updates.evaluators import (rd_models, ws_models, t_rds, extended_rd_models, extended_ws_models,
                                           extended_rd_trace, is_rd_model, is_ws_model, is_extended_rd_model,
                                           is_extended_ws_model, rd_level_mapping, extended_level_mapping,
                                           extended_ws_mapping, search_extended_mapping)
from dlp_engine.updates.semantics import SemanticsFactory, Verdict, check_candidate, models
