package examples;

import java.lang.annotation.*;

@Target(ElementType.TYPE)
public @interface Person {
    String name() default "Mary";
    int age() default 21;
    float weight() default 52.3f;
}
