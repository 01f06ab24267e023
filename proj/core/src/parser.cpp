namespace foxbrack {}
