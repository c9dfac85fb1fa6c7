// placeholder while the suite is being written
