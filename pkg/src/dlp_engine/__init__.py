try:
    from pymodaq_utils.logger import set_logger
    from pymodaq_utils.utils import get_version, PackageNotFoundError
    try:
        __version__ = get_version('dlp_engine')
    except PackageNotFoundError:
        __version__ = '0.0.0dev'
    try:
        logger = set_logger('dlp_engine', add_handler=True, base_logger=True)
    except Exception:
        print("Couldn't create the local folder to store logs , presets...")

    from dlp_engine.syntax import (DLP, Alphabet, Atom, DLPError, Literal, ObjectiveLiteral, Program, Rule,
                                   RuleOccurrence, alphabet_of, render)
    from dlp_engine.parser import ParseError, parse_dlp, parse_program
    from dlp_engine.interp import Interpretation
    from dlp_engine.modelset import ModelSet, SemanticsId
    from dlp_engine.updates.semantics import check_candidate, models

except Exception as e:
    try:
        logger.exception(str(e))
    except Exception as e:
        print(str(e))
