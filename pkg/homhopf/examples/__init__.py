__author__ = "The homhopf developers"
