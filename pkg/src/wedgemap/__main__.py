from wedgemap.cli import entry

entry()
