namespace klcy {}
