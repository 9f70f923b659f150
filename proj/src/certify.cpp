namespace fk {}
